"""Benchmark command line: `pairsim-bench` (or `python -m pairsim.cli`)."""

from __future__ import annotations

import argparse
import sys

from . import config
from .bench import WORKLOADS, BenchConfig, emit_report, run
from .gates import KINDS


def parse_qubit_range(text: str) -> tuple[int, int]:
    """Parse 'LO..HI' (or a bare qubit count) into an inclusive range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return int(lo), int(hi)
        n = int(text)
        return n, n
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="pairsim-bench",
        description="Run pairsim benchmark workloads and emit timing reports.",
    )
    p.add_argument("--workload", required=True, choices=WORKLOADS)
    p.add_argument("--gate", default="h", choices=KINDS, help="gate for gate-sweep workloads")
    p.add_argument("--qubits", default="5..22", type=parse_qubit_range, metavar="LO..HI")
    p.add_argument("--iters", type=int, default=10, help="timed iterations per point")
    p.add_argument("--layers", type=int, default=9, help="qcbm entangling layers")
    p.add_argument("--value", type=float, default=2.4, help="value-encoding parameter")
    p.add_argument("--seed", type=int, default=1234)
    p.add_argument("--format", dest="fmt", default="csv", choices=("csv", "json"))
    p.add_argument("--out", default=None, help="report path (stdout when omitted)")
    p.add_argument("--precision", default=None, choices=("single", "double"))
    p.add_argument("--plot", action="store_true", help="also render a PNG figure next to --out")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.plot and args.out is None:
        print("--plot needs --out to know where the figure goes", file=sys.stderr)
        return 2
    if args.precision is not None:
        config.set_precision(args.precision)

    cfg = BenchConfig(
        workload=args.workload,
        gate=args.gate,
        qubit_range=args.qubits,
        iterations=args.iters,
        layers=args.layers,
        value=args.value,
        seed=args.seed,
    )
    try:
        report = run(cfg)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        emit_report(report, args.fmt, args.out)
    except OSError as exc:
        print(f"error: cannot write report: {exc}", file=sys.stderr)
        return 1

    if args.plot:
        from .plotting import figure_path_for, render_report_figure

        figure = render_report_figure(report.rows, figure_path_for(args.out))
        print(f"figure written to {figure}", file=sys.stderr)

    for failure in report.failures:
        print(f"row failed: {failure}", file=sys.stderr)
    return 1 if report.failures else 0


if __name__ == "__main__":
    sys.exit(main())
