"""Runtime sweep over point count and dimension on Gaussian clouds."""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field

import numpy as np

from .builder import BuildConfig, build
from .geometry import ContractError, PointSet


@dataclass(frozen=True)
class BenchSpec:
    n_points: tuple[int, ...] = (100, 200)
    dims: tuple[int, ...] = (10,)
    max_vertices: int = 8
    seed: int = 0
    repetitions: int = 3
    # wall-clock columns make the table non-reproducible byte for byte
    include_timing: bool = True

    def __post_init__(self) -> None:
        if not self.n_points or not self.dims:
            raise ContractError("bench spec needs at least one N and one n")
        if min(self.n_points) < 1 or min(self.dims) < 1:
            raise ContractError("N and n must be positive")
        if self.max_vertices < 1 or self.repetitions < 1:
            raise ContractError("V and repetitions must be positive")

    @classmethod
    def from_dict(cls, d: dict) -> "BenchSpec":
        return cls(
            n_points=tuple(int(v) for v in d.get("N", cls.n_points)),
            dims=tuple(int(v) for v in d.get("n", cls.dims)),
            max_vertices=int(d.get("V", cls.max_vertices)),
            seed=int(d.get("seed", cls.seed)),
            repetitions=int(d.get("repetitions", cls.repetitions)),
            include_timing=bool(d.get("timing", True)),
        )


@dataclass
class BenchRow:
    N: int
    n: int
    V: int
    repetitions: int
    K_mean: float = float("nan")
    K_max: int = -1
    vertices_mean: float = float("nan")
    solver_calls_mean: float = float("nan")
    epsilon_mean: float = float("nan")
    wall_seconds_mean: float = float("nan")
    error: str = ""
    wall_seconds: list[float] = field(default_factory=list)


def cloud(N: int, n: int, seed: int, rep: int) -> np.ndarray:
    rng = np.random.default_rng([seed, N, n, rep])
    return rng.standard_normal((N, n))


def run_benchmark(spec: BenchSpec) -> list[BenchRow]:
    rows = []
    for N in spec.n_points:
        for n in spec.dims:
            row = BenchRow(N=N, n=n, V=spec.max_vertices, repetitions=spec.repetitions)
            Ks, sizes, calls, eps = [], [], [], []
            try:
                for rep in range(spec.repetitions):
                    points, _ = PointSet.from_rows(cloud(N, n, spec.seed, rep))
                    t0 = time.perf_counter()
                    vertices, trace = build(points, BuildConfig(max_vertices=spec.max_vertices))
                    row.wall_seconds.append(time.perf_counter() - t0)
                    Ks.append(trace.K)
                    sizes.append(len(vertices))
                    calls.append(trace.solver_calls)
                    eps.append(vertices.epsilon_achieved)
            except Exception as exc:  # a failing cell must not abort the sweep
                row.error = f"{type(exc).__name__}: {exc}"
            if Ks:
                row.K_mean = float(np.mean(Ks))
                row.K_max = int(max(Ks))
                row.vertices_mean = float(np.mean(sizes))
                row.solver_calls_mean = float(np.mean(calls))
                row.epsilon_mean = float(np.mean(eps))
                row.wall_seconds_mean = float(np.mean(row.wall_seconds))
            rows.append(row)
    return rows


def format_table(rows: list[BenchRow], include_timing: bool = True) -> str:
    header = ["N", "n", "V", "repetitions", "K_mean", "K_max", "vertices_mean", "solver_calls_mean", "epsilon_mean"]
    if include_timing:
        header.append("wall_seconds_mean")
    header.append("error")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        line = [r.N, r.n, r.V, r.repetitions, f"{r.K_mean:.6g}", r.K_max, f"{r.vertices_mean:.6g}",
                f"{r.solver_calls_mean:.6g}", f"{r.epsilon_mean:.12g}"]
        if include_timing:
            line.append(f"{r.wall_seconds_mean:.6f}")
        line.append(r.error)
        w.writerow(line)
    return buf.getvalue()
