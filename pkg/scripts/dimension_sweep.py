"""Runtime sweep over N and n on Gaussian clouds; writes a CSV table.

    python scripts/dimension_sweep.py --N 100 200 400 --n 10 100 1000 --V 10 --reps 3
"""

import argparse
import sys

from achull.bench import BenchSpec, format_table, run_benchmark


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--N", type=int, nargs="+", default=[100, 200, 400])
    p.add_argument("--n", type=int, nargs="+", default=[10, 100, 1000])
    p.add_argument("--V", type=int, default=10)
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-timing", action="store_true")
    p.add_argument("--output", default=None)
    args = p.parse_args()

    spec = BenchSpec(
        n_points=tuple(args.N),
        dims=tuple(args.n),
        max_vertices=args.V,
        seed=args.seed,
        repetitions=args.reps,
        include_timing=not args.no_timing,
    )
    table = format_table(run_benchmark(spec), include_timing=spec.include_timing)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(table)
    else:
        sys.stdout.write(table)


if __name__ == "__main__":
    main()
