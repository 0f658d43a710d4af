"""Point sets and Euclidean projection onto the convex hull of a few points.

The projection solves

    min_a ||z - sum_i a_i x_i||^2   s.t.  a_i >= 0, sum_i a_i = 1

with Wolfe's minimum-norm-point method applied to the translated points
``x_i - z``.  Every iterate is a convex combination of a small affinely
independent "corral", which suits the sparse solutions typical here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernel import STATUS_OK, hull_distance_indexed, min_norm_point

__all__ = [
    "ContractError",
    "ConvergenceError",
    "PointSet",
    "Projection",
    "SolverConfig",
    "data_diameter",
    "deduplicate",
    "distance_to_hull",
]


class ContractError(ValueError):
    """Input violates an operation's preconditions."""


class ConvergenceError(RuntimeError):
    """The projection solver hit its iteration cap before certifying optimality."""

    def __init__(self, message: str, best: "Projection | None" = None, gap: float = float("nan")):
        super().__init__(message)
        self.best = best
        self.gap = gap


def deduplicate(rows: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Drop repeated rows, keeping first occurrences in their original order.

    Returns the unique rows and, for every input row, the index of its
    representative among the unique rows.
    """
    rows = np.asarray(rows, dtype=np.float64)
    if rows.ndim != 2 or rows.shape[0] == 0:
        raise ContractError("expected a nonempty 2-D array of points")
    # -0.0 and 0.0 are the same point
    rows = rows + 0.0
    _, first, inverse = np.unique(rows, axis=0, return_index=True, return_inverse=True)
    inverse = inverse.ravel()
    order = np.argsort(first)
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    return rows[first[order]], rank[inverse]


@dataclass(frozen=True)
class PointSet:
    """Immutable N x n matrix of distinct, finite float64 points."""

    points: np.ndarray

    def __post_init__(self) -> None:
        pts = np.array(self.points, dtype=np.float64, copy=True)
        if pts.ndim != 2 or pts.shape[0] < 1 or pts.shape[1] < 1:
            raise ContractError(f"point set must be N x n with N, n >= 1, got shape {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ContractError("point coordinates must be finite")
        if np.unique(pts + 0.0, axis=0).shape[0] != pts.shape[0]:
            raise ContractError("point set contains duplicate rows; use PointSet.from_rows")
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_rows(cls, rows) -> tuple["PointSet", np.ndarray]:
        """Build a point set from raw rows, removing duplicates.

        The second return value maps each raw row to its retained index.
        """
        rows = np.asarray(rows, dtype=np.float64)
        if rows.ndim != 2 or rows.shape[0] == 0:
            raise ContractError("expected a nonempty 2-D array of points")
        if not np.all(np.isfinite(rows)):
            raise ContractError("point coordinates must be finite")
        unique, mapping = deduplicate(rows)
        return cls(unique), mapping

    @property
    def N(self) -> int:
        return self.points.shape[0]

    @property
    def n(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.N

    def __getitem__(self, idx):
        return self.points[idx]


@dataclass(frozen=True)
class Projection:
    distance: float
    weights: np.ndarray
    point: np.ndarray
    # max_j (z - p).(x_j - p); nonpositive at the exact optimum
    gap: float = 0.0
    iterations: int = 0


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances for :func:`distance_to_hull`.

    ``tol_opt`` bounds the optimality certificate.  When left as ``None`` it
    is derived as ``epsilon0 * diameter**2`` from the bounding box of the
    query and candidates, so results do not depend on the data's units.
    """

    tol_opt: float | None = None
    max_iterations: int = 1000
    epsilon0: float = 1e-9

    def __post_init__(self) -> None:
        if self.tol_opt is not None and not self.tol_opt > 0:
            raise ContractError("tol_opt must be positive")
        if self.max_iterations < 1:
            raise ContractError("max_iterations must be >= 1")
        if not self.epsilon0 > 0:
            raise ContractError("epsilon0 must be positive")

    def tolerance(self, scale: float) -> float:
        if self.tol_opt is not None:
            return self.tol_opt
        return self.epsilon0 * (scale * scale if scale > 0 else 1.0)


def data_diameter(points) -> float:
    """Diagonal of the axis-aligned bounding box, an O(Nn) upper bound on the diameter."""
    pts = points.points if isinstance(points, PointSet) else np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] < 1:
        raise ContractError("need at least one point")
    return float(np.linalg.norm(pts.max(axis=0) - pts.min(axis=0)))


def project_indexed(X: np.ndarray, candidates: np.ndarray, z: int, tol: float, max_iterations: int) -> float:
    """Distance from row ``z`` of ``X`` to the hull of rows ``candidates``."""
    d, gap, status = hull_distance_indexed(X, candidates, z, tol, max_iterations)
    if status != STATUS_OK:
        raise ConvergenceError(
            f"projection did not converge in {max_iterations} iterations (gap {gap:.3e})", gap=gap
        )
    return d


def distance_to_hull(z, candidates, config: SolverConfig | None = None) -> Projection:
    """Euclidean projection of ``z`` onto the convex hull of ``candidates``.

    The returned weights lie on the unit simplex and satisfy the optimality
    certificate ``max_j (z - p).(x_j - p) <= tol_opt``.
    """
    config = config or SolverConfig()
    X = candidates.points if isinstance(candidates, PointSet) else np.asarray(candidates, dtype=np.float64)
    z = np.asarray(z, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] < 1:
        raise ContractError("candidates must be a nonempty N x n array")
    if z.ndim != 1 or z.shape[0] != X.shape[1]:
        raise ContractError(f"dimension mismatch: z has shape {z.shape}, candidates have n = {X.shape[1]}")
    if not (np.all(np.isfinite(z)) and np.all(np.isfinite(X))):
        raise ContractError("inputs must be finite")

    scale = float(np.linalg.norm(np.maximum(X.max(axis=0), z) - np.minimum(X.min(axis=0), z)))
    tol = config.tolerance(scale)
    w, r, _, it, status = min_norm_point(np.ascontiguousarray(X - z), tol, config.max_iterations)

    p = z + r
    # certificate recomputed from the vectors themselves
    gap = float(np.max((X - p) @ (z - p)))
    proj = Projection(distance=float(np.linalg.norm(r)), weights=w, point=p, gap=gap, iterations=it)
    if status != STATUS_OK:
        raise ConvergenceError(
            f"projection did not converge in {config.max_iterations} iterations (gap {gap:.3e})", best=proj, gap=gap
        )
    if gap > tol:
        raise ConvergenceError(
            f"projection certificate violated: gap {gap:.3e} > tol {tol:.3e}", best=proj, gap=gap
        )
    return proj
