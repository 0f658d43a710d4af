"""Greedy construction of an approximate convex hull.

Starting from an extreme point, each iteration adds the point whose
inclusion minimises the worst distance of the remaining points to the hull
of the selected vertices.  Points found at (numerically) zero distance are
retired from the search, and selected vertices that fall inside the hull of
the others are dropped.
"""

from __future__ import annotations

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Literal

import numpy as np

from .geometry import ContractError, ConvergenceError, PointSet, SolverConfig, data_diameter, project_indexed
from .minmax import directed_min_max

log = logging.getLogger(__name__)

TieMode = Literal["deterministic", "random"]


@dataclass(frozen=True)
class VertexSet:
    indices: tuple[int, ...]
    epsilon_achieved: float = float("inf")

    def __len__(self) -> int:
        return len(self.indices)


@dataclass(frozen=True)
class BuildConfig:
    """Stopping rule and tolerances for :func:`build`.

    ``max_vertices=None`` means no budget (N).  ``tol_interior=None`` uses
    ``1e-9`` times the bounding-box diagonal of the data.
    """

    max_vertices: int | None = None
    epsilon_des: float = 0.0
    tol_interior: float | None = None
    solver: SolverConfig = field(default_factory=SolverConfig)
    tie_mode: TieMode = "deterministic"
    seed: int | None = None
    threads: int = 1

    def __post_init__(self) -> None:
        if self.max_vertices is not None and self.max_vertices < 1:
            raise ContractError("max_vertices must be >= 1")
        if not self.epsilon_des >= 0:
            raise ContractError("epsilon_des must be >= 0")
        if self.tol_interior is not None and not self.tol_interior > 0:
            raise ContractError("tol_interior must be > 0")
        if self.tie_mode not in ("deterministic", "random"):
            raise ContractError(f"unknown tie mode {self.tie_mode!r}")
        if self.threads < 1:
            raise ContractError("threads must be >= 1")


@dataclass(frozen=True)
class Resolved:
    """A BuildConfig with data-dependent defaults filled in."""

    max_vertices: int
    epsilon_des: float
    tol_interior: float
    tol_opt: float
    max_iterations: int


def resolve(points: PointSet, config: BuildConfig) -> Resolved:
    diam = data_diameter(points)
    rel = diam if diam > 0 else 1.0
    return Resolved(
        max_vertices=config.max_vertices if config.max_vertices is not None else points.N,
        epsilon_des=config.epsilon_des,
        tol_interior=config.tol_interior if config.tol_interior is not None else 1e-9 * rel,
        tol_opt=config.solver.tolerance(diam),
        max_iterations=config.solver.max_iterations,
    )


@dataclass
class IterationRecord:
    k: int
    chosen: int
    eps_hat: float
    n_interior: int
    n_interior_total: int
    evals_used: int
    pruned: list[int]


@dataclass
class BuildTrace:
    iterations: list[IterationRecord] = field(default_factory=list)
    initial: int = -1
    solver_calls: int = 0
    solver_seconds: float = 0.0
    search_seconds: float = 0.0
    wall_seconds: float = 0.0

    @property
    def K(self) -> int:
        return len(self.iterations)

    @property
    def eps_sequence(self) -> list[float]:
        return [rec.eps_hat for rec in self.iterations]

    def to_dict(self) -> dict:
        return {
            "initial": self.initial,
            "K": self.K,
            "solver_calls": self.solver_calls,
            "iterations": [asdict(rec) for rec in self.iterations],
        }


class _Counter:
    # first-row evaluations may run on worker threads
    def __init__(self):
        self.calls = 0
        self.seconds = 0.0
        self._lock = threading.Lock()

    def add(self, seconds: float = 0.0, calls: int = 1) -> None:
        with self._lock:
            self.calls += calls
            self.seconds += seconds


class HullDistanceOracle:
    """Lazy matrix with entries ``d(z_i, hull(vertices + [x_j]))`` over the active points."""

    def __init__(self, X: np.ndarray, vertices, active: np.ndarray, tol_opt: float, max_iterations: int, counter: _Counter | None = None):
        self.X = X
        self.candidates = np.append(np.asarray(vertices, dtype=np.int64), -1)
        self.active = active
        self.row_count = self.col_count = len(active)
        self.tol_opt = tol_opt
        self.max_iterations = max_iterations
        self.counter = counter or _Counter()

    def eval(self, i: int, j: int) -> float:
        zi, xj = self.active[i], self.active[j]
        if zi == xj:
            self.counter.add()
            return 0.0
        t0 = time.perf_counter()
        cand = self.candidates.copy()
        cand[-1] = xj
        d = project_indexed(self.X, cand, int(zi), self.tol_opt, self.max_iterations)
        self.counter.add(time.perf_counter() - t0)
        return d


def _hull_distance(X: np.ndarray, z: int, others, res: Resolved, counter: _Counter | None = None) -> float:
    t0 = time.perf_counter()
    d = project_indexed(X, np.asarray(others, dtype=np.int64), int(z), res.tol_opt, res.max_iterations)
    if counter is not None:
        counter.add(time.perf_counter() - t0)
    return d


def initialize(points: PointSet) -> VertexSet:
    """Lexicographically smallest point; it attains the minimum of coordinate 1 and is extreme."""
    X = points.points
    if X.shape[0] < 1:
        raise ContractError("empty point set")
    order = np.lexsort(X.T[::-1])
    return VertexSet((int(order[0]),))


@dataclass
class GreedyStep:
    j_hat: int
    eps_hat: float
    winning_column: np.ndarray
    column: int
    evals_used: int


def greedy_step(
    points: PointSet,
    active,
    vertices: VertexSet,
    config: BuildConfig,
    *,
    rng: np.random.Generator | None = None,
    executor=None,
    counter: _Counter | None = None,
    resolved: Resolved | None = None,
) -> GreedyStep:
    """Choose the active point whose addition minimises the worst remaining distance.

    ``j_hat`` is a point index; ``winning_column[i]`` is the distance of
    ``active[i]`` to the enlarged hull.
    """
    active = np.asarray(active, dtype=np.int64)
    if active.size == 0:
        raise ContractError("no active candidates")
    res = resolved or resolve(points, config)
    if rng is None and config.tie_mode == "random":
        rng = np.random.default_rng(config.seed)
    oracle = HullDistanceOracle(points.points, vertices.indices, active, res.tol_opt, res.max_iterations, counter)
    try:
        out = directed_min_max(oracle, rng=rng, executor=executor)
    except ConvergenceError as exc:
        raise ConvergenceError(
            f"greedy step with {len(vertices)} vertices and {active.size} active points: {exc}", gap=exc.gap
        ) from exc
    return GreedyStep(
        j_hat=int(active[out.j_hat]),
        eps_hat=out.eps_hat,
        winning_column=out.winning_column,
        column=out.j_hat,
        evals_used=out.evals_used,
    )


def detect_interior(winning_column, active, tol_interior: float, chosen: int | None = None) -> list[int]:
    """Active points whose distance in the winning column is at most ``tol_interior``."""
    col = np.asarray(winning_column, dtype=np.float64)
    active = np.asarray(active, dtype=np.int64)
    if col.shape != active.shape:
        raise ContractError("winning column must cover every active point")
    hits = active[col <= tol_interior]
    return [int(i) for i in hits if i != chosen]


def prune_vertices(
    points: PointSet,
    vertices: VertexSet,
    config: BuildConfig,
    *,
    counter: _Counter | None = None,
    resolved: Resolved | None = None,
) -> VertexSet:
    """Drop vertices lying within ``tol_interior`` of the hull of the remaining ones.

    Scans in index order and restarts after every removal.
    """
    if len(vertices) < 1:
        raise ContractError("empty vertex set")
    res = resolved or resolve(points, config)
    X = points.points
    current = sorted(vertices.indices)
    removed = True
    while removed and len(current) > 1:
        removed = False
        for c in current:
            others = [v for v in current if v != c]
            if _hull_distance(X, c, others, res, counter) <= res.tol_interior:
                current.remove(c)
                removed = True
                break
    kept = set(current)
    return VertexSet(tuple(v for v in vertices.indices if v in kept), vertices.epsilon_achieved)


def build(points: PointSet, config: BuildConfig | None = None) -> tuple[VertexSet, BuildTrace]:
    """Greedy approximate hull under a vertex budget and a target error.

    Iterates until the budget is used, the worst distance falls to
    ``epsilon_des`` or no candidate points remain (the hull is then exact and
    the reported error is 0).  Every input point ends within
    ``epsilon_achieved + tol_interior`` of the returned hull.
    """
    config = config or BuildConfig()
    if not isinstance(points, PointSet):
        points = PointSet(points)
    res = resolve(points, config)
    X = points.points
    N = points.N
    trace = BuildTrace()
    counter = _Counter()
    rng = np.random.default_rng(config.seed) if config.tie_mode == "random" else None
    executor = ThreadPoolExecutor(config.threads) if config.threads > 1 else None
    t_start = time.perf_counter()

    vertices = initialize(points)
    trace.initial = vertices.indices[0]
    active = np.ones(N, dtype=bool)
    active[trace.initial] = False
    interior_total = 0

    if N == 1:
        eps = 0.0
    else:
        # before any greedy step the hull is a single point
        eps = float(np.max(np.linalg.norm(X - X[trace.initial], axis=1)))

    try:
        while len(vertices) < res.max_vertices and eps > res.epsilon_des and active.any() and trace.K < res.max_vertices:
            idx = np.flatnonzero(active)
            t0 = time.perf_counter()
            step = greedy_step(points, idx, vertices, config, rng=rng, executor=executor, counter=counter, resolved=res)
            trace.search_seconds += time.perf_counter() - t0

            interior = detect_interior(step.winning_column, idx, res.tol_interior, chosen=step.j_hat)
            active[interior] = False
            active[step.j_hat] = False
            interior_total += len(interior)
            eps = step.eps_hat

            grown = VertexSet(vertices.indices + (step.j_hat,), eps)
            vertices = prune_vertices(points, grown, config, counter=counter, resolved=res)
            pruned = [v for v in grown.indices if v not in set(vertices.indices)]
            trace.iterations.append(
                IterationRecord(
                    k=trace.K + 1,
                    chosen=step.j_hat,
                    eps_hat=step.eps_hat,
                    n_interior=len(interior),
                    n_interior_total=interior_total,
                    evals_used=step.evals_used,
                    pruned=pruned,
                )
            )
            log.debug("iteration %d: chose %d, eps %.6g, %d interior", trace.K, step.j_hat, eps, len(interior))
    finally:
        if executor is not None:
            executor.shutdown()

    if not active.any():
        eps = 0.0
    trace.solver_calls = counter.calls
    trace.solver_seconds = counter.seconds
    trace.wall_seconds = time.perf_counter() - t_start
    return VertexSet(vertices.indices, eps), trace


def coverage(points: PointSet, vertices: VertexSet, config: BuildConfig | None = None) -> np.ndarray:
    """Distance of every point to the hull of ``vertices``."""
    config = config or BuildConfig()
    res = resolve(points, config)
    X = points.points
    return np.array([_hull_distance(X, i, vertices.indices, res) for i in range(points.N)])
