"""Command line entry point.

    achull --input points.csv [--max-vertices V] [--epsilon E] [--tol-interior t|auto]
           [--tie deterministic|random --seed s] [--output report.json] [--threads k]
    achull bench --spec bench.json [--output table.csv]

Exit codes: 0 success, 2 bad input or arguments, 3 solver non-convergence.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .bench import BenchSpec, format_table, run_benchmark
from .builder import BuildConfig, build
from .geometry import ContractError, ConvergenceError
from .io import dump_report, load_points, make_report

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_SOLVER = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ContractError(message)


def _tol(value: str):
    if value == "auto":
        return None
    v = float(value)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive or 'auto'")
    return v


def hull_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="achull", description="Greedy approximate convex hull of a CSV point set.")
    p.add_argument("--input", required=True, help="CSV file, one point per row")
    p.add_argument("--delimiter", default=",")
    p.add_argument("--header", action="store_true", help="skip the first row")
    p.add_argument("--max-vertices", type=int, default=None, help="vertex budget V (default: N)")
    p.add_argument("--epsilon", type=float, default=0.0, help="target error, data units")
    p.add_argument("--tol-interior", type=_tol, default=None, metavar="t|auto")
    p.add_argument("--tie", choices=("deterministic", "random"), default="deterministic")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--output", default=None, help="report path (default: stdout)")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def bench_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="achull bench", description="Runtime sweep on Gaussian clouds.")
    p.add_argument("--spec", required=True, help='JSON like {"N": [100, 200], "n": [10], "V": 8, "seed": 0, "repetitions": 3}')
    p.add_argument("--output", default=None)
    return p


def _run_hull(argv) -> int:
    args = hull_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    config = BuildConfig(
        max_vertices=args.max_vertices,
        epsilon_des=args.epsilon,
        tol_interior=args.tol_interior,
        tie_mode=args.tie,
        seed=args.seed,
        threads=args.threads,
    )
    try:
        loaded = load_points(args.input, delimiter=args.delimiter, has_header=args.header)
    except OSError as exc:
        raise ContractError(f"cannot read {args.input}: {exc.strerror or exc}") from None
    vertices, trace = build(loaded.points, config)
    text = dump_report(make_report(loaded, config, vertices, trace, input_path=args.input))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _run_bench(argv) -> int:
    args = bench_parser().parse_args(argv)
    try:
        with open(args.spec, encoding="utf-8") as fh:
            spec = BenchSpec.from_dict(json.load(fh))
    except (OSError, ValueError, TypeError) as exc:
        raise ContractError(f"bad bench spec {args.spec}: {exc}") from None
    table = format_table(run_benchmark(spec), include_timing=spec.include_timing)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(table)
    else:
        sys.stdout.write(table)
    return EXIT_OK


def run_cli(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        if argv and argv[0] == "bench":
            return _run_bench(argv[1:])
        return _run_hull(argv)
    except ConvergenceError as exc:
        print(f"achull: solver did not converge: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except ContractError as exc:
        print(f"achull: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
