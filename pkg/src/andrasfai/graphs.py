"""Circulant Cayley graphs over Z_n and the Andrasfai family And(k).

And(k) is the Cayley graph over Z_{3k-1} whose connection set is every
residue congruent to 1 mod 3.  Graphs are stored as (n, connection set)
only; the dense adjacency matrix is materialized on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

EXPORT_FORMATS = ("dot", "edge-list", "json")


@dataclass(frozen=True)
class ConnectionSet:
    """Residues of Z_n generating a Cayley adjacency, closed under negation."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"group order must be >= 2, got {self.n}")
        members = tuple(sorted(set(int(s) for s in self.members)))
        object.__setattr__(self, "members", members)
        for s in members:
            if not 1 <= s <= self.n - 1:
                raise ValueError(f"residue {s} outside [1, {self.n - 1}]")
        present = set(members)
        for s in members:
            if (self.n - s) % self.n not in present:
                raise ValueError(
                    f"connection set not closed under negation: {s} present "
                    f"but {self.n - s} missing"
                )

    @cached_property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, residue: int) -> bool:
        return residue in self.as_set


@dataclass(frozen=True)
class CirculantGraph:
    """Cay(Z_n, S): vertices 0..n-1, u ~ v iff (v - u) mod n is in S."""

    n: int
    connection: ConnectionSet
    k_param: int | None = field(default=None)

    def __post_init__(self) -> None:
        if self.connection.n != self.n:
            raise ValueError(
                f"connection set is over Z_{self.connection.n}, graph has n={self.n}"
            )

    @property
    def degree(self) -> int:
        return len(self.connection)

    def adjacent(self, u: int, v: int) -> bool:
        return (v - u) % self.n in self.connection

    def neighbors(self, u: int) -> list[int]:
        return sorted((u + s) % self.n for s in self.connection.members)

    def edge_array(self) -> np.ndarray:
        """All edges as an (m, 2) array with u < v, in ascending (u, v) order.

        Each unordered edge {u, v} appears exactly twice in the (vertex, step)
        scan, once from each endpoint; keeping u < v selects one copy, and the
        scan order already emits the result lexicographically sorted.
        """
        if not self.connection.members:
            return np.empty((0, 2), dtype=np.int64)
        steps = np.array(self.connection.members, dtype=np.int64)
        u = np.repeat(np.arange(self.n, dtype=np.int64), len(steps))
        v = (u + np.tile(steps, self.n)) % self.n
        keep = u < v
        return np.stack([u[keep], v[keep]], axis=1)

    def edges(self) -> list[tuple[int, int]]:
        return [(int(u), int(v)) for u, v in self.edge_array()]


def andrasfai_connection_set(k: int) -> ConnectionSet:
    """Connection set of And(k): {x in Z_{3k-1} : x = 1 mod 3}, k members."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = 3 * k - 1
    return ConnectionSet(n=n, members=tuple(range(1, n, 3)))


def build_circulant(n: int, connection: ConnectionSet) -> CirculantGraph:
    return CirculantGraph(n=n, connection=connection)


def andrasfai_graph(k: int) -> CirculantGraph:
    conn = andrasfai_connection_set(k)
    return CirculantGraph(n=conn.n, connection=conn, k_param=k)


def adjacency_matrix(g: CirculantGraph) -> np.ndarray:
    """Dense 0/1 adjacency matrix; row i is row 0 shifted right by i."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    idx = np.arange(g.n)
    for s in g.connection.members:
        a[idx, (idx + s) % g.n] = 1
    return a


def is_connected(g: CirculantGraph) -> bool:
    """Breadth-first reachability of every vertex from vertex 0."""
    if not g.connection.members:
        return g.n == 1
    steps = np.array(g.connection.members, dtype=np.int64)
    visited = np.zeros(g.n, dtype=bool)
    visited[0] = True
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        nxt = np.unique((frontier[:, None] + steps).ravel() % g.n)
        nxt = nxt[~visited[nxt]]
        visited[nxt] = True
        frontier = nxt
    return bool(visited.all())


def _vertex_labels(n: int, suffix: str) -> np.ndarray:
    return np.array([f"{i}{suffix}" for i in range(n)])


def export_graph(g: CirculantGraph, fmt: str) -> str:
    """Serialize a graph; edge order is canonical (u < v, ascending)."""
    if fmt not in EXPORT_FORMATS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {EXPORT_FORMATS}")
    edges = g.edge_array()
    if fmt == "edge-list":
        if not len(edges):
            return ""
        # label lookup keeps large exports off the per-edge formatting path
        left = _vertex_labels(g.n, " ")
        right = _vertex_labels(g.n, "")
        lines = np.char.add(left[edges[:, 0]], right[edges[:, 1]])
        return "\n".join(lines.tolist()) + "\n"
    if fmt == "dot":
        name = f"andrasfai_{g.k_param}" if g.k_param is not None else f"circulant_{g.n}"
        body = "".join(f"  {u} -- {v};\n" for u, v in edges)
        return f"graph {name} {{\n{body}}}\n"
    payload = {
        "n": g.n,
        "connection": list(g.connection.members),
        "edges": [[int(u), int(v)] for u, v in edges],
    }
    return json.dumps(payload) + "\n"


def parse_edge_list(text: str) -> np.ndarray:
    """Parse canonical edge-list text back into an (m, 2) array.

    Accepts exactly the format export_graph emits: one "u v" pair per line,
    single spaces, u < v.
    """
    body = text.strip()
    if not body:
        return np.empty((0, 2), dtype=np.int64)
    if body.strip("0123456789 \n"):
        raise ValueError("malformed edge list")
    expected_tokens = body.count(" ") + body.count("\n") + 1
    flat = np.fromstring(body, dtype=np.int64, sep=" ")
    if flat.size != expected_tokens or flat.size % 2:
        raise ValueError("malformed edge list")
    edges = flat.reshape(-1, 2)
    if (edges[:, 0] < 0).any() or (edges[:, 0] >= edges[:, 1]).any():
        raise ValueError("edge list entries must satisfy 0 <= u < v")
    return edges
