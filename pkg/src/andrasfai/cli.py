"""Command-line front end: spectrum, export, verify, sweep.

Human-oriented tables print floats with 6 decimals; machine formats (json,
csv) carry 12 significant digits.  When no format is given, a terminal gets
a table and a pipe or file gets json.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .graphs import andrasfai_graph, export_graph
from .spectra import TOL_CLUSTER, TOL_SYM, pair_multiplicities, spectrum_closed_form
from .verify import SweepReport, run_sweep

TOL_CLUSTER_ENV = "SPECTRA_TOL_CLUSTER"


def _round12(value: float) -> float:
    return float(f"{value:.12g}")


def _round_tree(obj):
    if isinstance(obj, float):
        return _round12(obj)
    if isinstance(obj, list):
        return [_round_tree(x) for x in obj]
    if isinstance(obj, dict):
        return {key: _round_tree(val) for key, val in obj.items()}
    return obj


def _class_ids(table) -> dict[int, int]:
    ids: dict[int, int] = {}
    for cid, cls in enumerate(table.classes):
        for member in cls.members:
            ids[member] = cid
    return ids


def _spectrum_json(spectrum, table) -> str:
    pairs = [[l, spectrum.n - l] for l in range(1, (spectrum.n - 1) // 2 + 1)]
    payload = {
        "k": spectrum.k,
        "n": spectrum.n,
        "source": spectrum.source,
        "values": [_round12(float(v)) for v in spectrum.values],
        "pairs": pairs,
    }
    return json.dumps(payload, indent=2) + "\n"


def _spectrum_csv(spectrum, table) -> str:
    ids = _class_ids(table)
    lines = ["l,value,class_id"]
    for l, v in enumerate(spectrum.values):
        lines.append(f"{l},{v:.12g},{ids[l]}")
    return "\n".join(lines) + "\n"


def _spectrum_table(spectrum, table) -> str:
    ids = _class_ids(table)
    lines = [f"{'l':>6}  {'x_l':>12}  {'pair':>6}  {'class':>6}"]
    for l, v in enumerate(spectrum.values):
        pair = (spectrum.n - l) % spectrum.n
        lines.append(f"{l:>6}  {v:>12.6f}  {pair:>6}  {ids[l]:>6}")
    return "\n".join(lines) + "\n"


def _report_json(report: SweepReport) -> str:
    return json.dumps(_round_tree(report.to_json_dict()), indent=2) + "\n"


def _report_table(report: SweepReport, tol_cluster: float) -> str:
    lines = []
    for v in report.verdicts:
        lines.append(f"k={v.k:<4} {v.claim_id:<24} {v.status:<17} {v.detail}")
    counts = report.counts()
    total = len(report.verdicts)
    lines.append(
        f"verdicts: {total} (pass {counts['pass']}, "
        f"erratum_detected {counts['erratum_detected']}, fail {counts['fail']})"
    )
    lines.append(
        f"min_gap: {report.min_gap:.6g}  oracle_max_dev: {report.oracle_max_dev:.6g}  "
        f"wall_time: {report.wall_time:.2f}s"
    )
    if report.min_gap <= tol_cluster:
        lines.append(
            f"warning: min_gap {report.min_gap:.3g} <= tol_cluster {tol_cluster:.3g}; "
            "tolerance review required"
        )
    lines.append("result: " + ("PASS" if report.all_ok else "FAIL"))
    return "\n".join(lines) + "\n"


def _default_format(output: str | None) -> str:
    if output is not None or not sys.stdout.isatty():
        return "json"
    return "table"


def _write(text: str, output: str | None) -> int:
    if output is None:
        sys.stdout.write(text)
        return 0
    try:
        Path(output).write_text(text)
    except OSError as exc:
        print(f"error: cannot write {output}: {exc}", file=sys.stderr)
        return 2
    return 0


def _resolve_tolerances(args, parser: argparse.ArgumentParser) -> tuple[float, float]:
    tol_sym = args.tol_sym if args.tol_sym is not None else TOL_SYM
    tol_cluster = args.tol_cluster
    if tol_cluster is None:
        raw = os.environ.get(TOL_CLUSTER_ENV)
        if raw is not None:
            try:
                tol_cluster = float(raw)
            except ValueError:
                parser.error(f"invalid {TOL_CLUSTER_ENV} value: {raw!r}")
        else:
            tol_cluster = TOL_CLUSTER
    if tol_sym <= 0 or tol_cluster <= 0 or tol_sym > tol_cluster:
        parser.error(
            f"tolerances must satisfy 0 < tol_sym <= tol_cluster, "
            f"got tol_sym={tol_sym:g} tol_cluster={tol_cluster:g}"
        )
    return tol_sym, tol_cluster


def _cmd_spectrum(args, parser) -> int:
    if args.k < 1:
        parser.error(f"spectrum requires k >= 1, got {args.k}")
    _, tol_cluster = _resolve_tolerances(args, parser)
    spectrum = spectrum_closed_form(args.k)
    table = pair_multiplicities(spectrum, tol_cluster)
    fmt = args.format or _default_format(args.output)
    render = {"json": _spectrum_json, "csv": _spectrum_csv, "table": _spectrum_table}[fmt]
    return _write(render(spectrum, table), args.output)


def _cmd_export(args, parser) -> int:
    if args.k < 1:
        parser.error(f"export requires k >= 1, got {args.k}")
    return _write(export_graph(andrasfai_graph(args.k), args.format), args.output)


def _run_and_report(args, parser, k_min: int, k_max: int) -> int:
    tol_sym, tol_cluster = _resolve_tolerances(args, parser)
    oracle_limit = 0 if args.no_oracle else args.oracle_limit
    report = run_sweep(
        k_min, k_max, oracle_limit=oracle_limit, tol_sym=tol_sym, tol_cluster=tol_cluster
    )
    fmt = args.format or _default_format(args.output)
    text = _report_json(report) if fmt == "json" else _report_table(report, tol_cluster)
    rc = _write(text, args.output)
    return rc if rc else report.exit_code()


def _cmd_verify(args, parser) -> int:
    if args.k < 2:
        parser.error(f"verify requires k >= 2 (theorem range), got {args.k}")
    return _run_and_report(args, parser, args.k, args.k)


def _cmd_sweep(args, parser) -> int:
    if not 2 <= args.k_min <= args.k_max:
        parser.error(
            f"sweep requires 2 <= from <= to, got from={args.k_min} to={args.k_max}"
        )
    return _run_and_report(args, parser, args.k_min, args.k_max)


def _add_tolerance_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tol-sym", type=float, default=None,
                     help=f"palindrome tolerance (default {TOL_SYM:g})")
    sub.add_argument("--tol-cluster", type=float, default=None,
                     help=f"clustering tolerance (default {TOL_CLUSTER:g}, "
                          f"or ${TOL_CLUSTER_ENV})")


def _add_verifier_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--oracle-limit", type=int, default=600,
                     help="run the Jacobi oracle only for n = 3k-1 up to this (default 600)")
    sub.add_argument("--no-oracle", action="store_true",
                     help="skip the eigensolver oracle entirely")
    sub.add_argument("--format", choices=("table", "json"), default=None)
    sub.add_argument("--output", default=None, help="write to file instead of stdout")
    _add_tolerance_flags(sub)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="andrasfai",
        description="Build And(k) circulant graphs, compute their spectra, "
                    "and verify the closed-form spectral claims.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("spectrum", help="closed-form spectrum of And(k)")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--format", choices=("table", "json", "csv"), default=None)
    sub.add_argument("--output", default=None)
    _add_tolerance_flags(sub)
    sub.set_defaults(func=_cmd_spectrum)

    sub = commands.add_parser("export", help="serialize the graph And(k)")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--format", choices=("dot", "edge-list", "json"), default="dot")
    sub.add_argument("--output", default=None)
    sub.set_defaults(func=_cmd_export)

    sub = commands.add_parser("verify", help="check every claim at a single k")
    sub.add_argument("--k", type=int, required=True)
    _add_verifier_flags(sub)
    sub.set_defaults(func=_cmd_verify)

    sub = commands.add_parser("sweep", help="check every claim over a k range")
    sub.add_argument("--from", dest="k_min", type=int, required=True)
    sub.add_argument("--to", dest="k_max", type=int, required=True)
    _add_verifier_flags(sub)
    sub.set_defaults(func=_cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
