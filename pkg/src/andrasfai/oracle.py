"""Independent ground truth: a cyclic Jacobi eigensolver on dense matrices.

The verifier never trusts the cosine-sum path alone; every spectrum it
certifies is re-derived here by plane rotations on the explicitly
materialized matrix.  The kernel is deliberately the plain textbook
algorithm so it can be audited independently of the closed-form code; it is
compiled with numba on first use purely for speed (n up to ~600 in the
standard sweep).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# max sorted-position deviation for two spectra to count as the same
MATCH_TOL = 1e-8

MAX_SWEEPS = 100
SYMMETRY_TOL = 1e-12


class ConvergenceError(RuntimeError):
    """Raised when the sweep cap is hit; carries the residual off-norm."""

    def __init__(self, residual: float, sweeps: int):
        super().__init__(
            f"Jacobi failed to converge in {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )
        self.residual = residual


@dataclass
class OracleResult:
    n: int
    sorted_values: np.ndarray
    iterations: int
    off_diagonal_norm: float


@dataclass(frozen=True)
class SpectrumComparison:
    max_abs_dev: float
    matched: bool


def _jacobi_sweeps(a, threshold, max_sweeps):
    """Row-major cyclic Jacobi on the upper triangle of a.

    Rotations below skip = threshold/(2n) are suppressed: if every entry is
    that small the off-norm is already under threshold, and otherwise at
    least one rotation fires, so each sweep makes progress.  Only the upper
    triangle is kept current; the diagonal lives in d.  Returns
    (d, rotations, off_norm, converged).
    """
    n = a.shape[0]
    d = np.empty(n)
    for i in range(n):
        d[i] = a[i, i]
    rotations = 0
    sweeps_done = 0
    skip = threshold / (2.0 * n)
    while True:
        off = 0.0
        for i in range(n):
            for j in range(i + 1, n):
                off += 2.0 * a[i, j] * a[i, j]
        off = math.sqrt(off)
        if off < threshold:
            return d, rotations, off, True
        if sweeps_done == max_sweeps:
            return d, rotations, off, False
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (d[q] - d[p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                d[p] -= t * apq
                d[q] += t * apq
                a[p, q] = 0.0
                for j in range(p):
                    g = a[j, p]
                    h = a[j, q]
                    a[j, p] = g - s * (h + g * tau)
                    a[j, q] = h + s * (g - h * tau)
                for j in range(p + 1, q):
                    g = a[p, j]
                    h = a[j, q]
                    a[p, j] = g - s * (h + g * tau)
                    a[j, q] = h + s * (g - h * tau)
                for j in range(q + 1, n):
                    g = a[p, j]
                    h = a[q, j]
                    a[p, j] = g - s * (h + g * tau)
                    a[q, j] = h + s * (g - h * tau)
                rotations += 1
        sweeps_done += 1


@lru_cache(maxsize=1)
def _compiled_sweeps():
    from numba import njit

    return njit(cache=True)(_jacobi_sweeps)


def jacobi_eigenvalues(matrix, threshold: float | None = None) -> OracleResult:
    """Eigenvalues of a symmetric real matrix by cyclic Jacobi rotations.

    Sweeps run in deterministic row-major order over the upper triangle
    until the off-diagonal Frobenius norm drops below threshold (default
    1e-12 * n).  The input is never mutated.
    """
    a = np.array(matrix, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        raise ValueError("matrix must have n >= 1")
    asym = float(np.abs(a - a.T).max()) if n > 1 else 0.0
    if asym > SYMMETRY_TOL:
        raise ValueError(f"matrix not symmetric: max |a - a.T| = {asym:.3e}")
    if threshold is None:
        threshold = 1e-12 * n
    d, rotations, off, converged = _compiled_sweeps()(a, float(threshold), MAX_SWEEPS)
    if not converged:
        raise ConvergenceError(off, MAX_SWEEPS)
    return OracleResult(
        n=n,
        sorted_values=np.sort(d),
        iterations=int(rotations),
        off_diagonal_norm=float(off),
    )


def compare_spectra(a, b: OracleResult) -> SpectrumComparison:
    """Positional comparison of an indexed spectrum against oracle output."""
    values = np.asarray(a.values, dtype=np.float64)
    if values.size != b.n:
        raise ValueError(f"length mismatch: spectrum has {values.size}, oracle has {b.n}")
    dev = float(np.abs(np.sort(values) - b.sorted_values).max())
    return SpectrumComparison(max_abs_dev=dev, matched=dev < MATCH_TOL)


def cluster_distinct(values, tol: float) -> list[tuple[float, int]]:
    """Greedy left-to-right clustering of sorted values into (mean, count).

    A new cluster opens when the gap to the current cluster's first member
    exceeds tol.
    """
    vals = np.asarray(values, dtype=np.float64)
    if vals.ndim != 1:
        raise ValueError("values must be 1-d")
    if vals.size == 0:
        return []
    if (np.diff(vals) < 0).any():
        raise ValueError("values must be sorted ascending")
    clusters: list[tuple[float, int]] = []
    start = 0
    anchor = vals[0]
    for i in range(1, vals.size):
        if vals[i] - anchor > tol:
            clusters.append((float(vals[start:i].mean()), i - start))
            start = i
            anchor = vals[i]
    clusters.append((float(vals[start:].mean()), vals.size - start))
    return clusters
