"""Worst-case error against vertex budget for one cloud.

Prints V, |E|, epsilon and K for V = 1..Vmax, tracing the accuracy versus
size trade-off of the greedy hull.
"""

import argparse

import numpy as np

from achull import BuildConfig, PointSet, build


def main():
    p = argparse.ArgumentParser()
    p.add_argument("--N", type=int, default=300)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--vmax", type=int, default=25)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()

    pts = PointSet(np.random.default_rng(args.seed).standard_normal((args.N, args.n)))
    print("V,vertices,epsilon,K,solver_calls")
    for V in range(1, args.vmax + 1):
        vertices, trace = build(pts, BuildConfig(max_vertices=V))
        print(f"{V},{len(vertices)},{vertices.epsilon_achieved:.6g},{trace.K},{trace.solver_calls}")


if __name__ == "__main__":
    main()
