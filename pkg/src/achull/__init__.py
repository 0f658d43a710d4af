"""Greedy approximate convex hulls in high dimension."""

from .builder import BuildConfig, BuildTrace, VertexSet, build, detect_interior, greedy_step, initialize, prune_vertices
from .geometry import (
    ContractError,
    ConvergenceError,
    PointSet,
    Projection,
    SolverConfig,
    data_diameter,
    distance_to_hull,
)
from .minmax import DenseMatrixOracle, MatrixOracle, SearchState, directed_min_max

__all__ = [
    "BuildConfig",
    "BuildTrace",
    "ContractError",
    "ConvergenceError",
    "DenseMatrixOracle",
    "MatrixOracle",
    "PointSet",
    "Projection",
    "SearchState",
    "SolverConfig",
    "VertexSet",
    "build",
    "data_diameter",
    "detect_interior",
    "directed_min_max",
    "distance_to_hull",
    "greedy_step",
    "initialize",
    "prune_vertices",
]
