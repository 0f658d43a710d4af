"""Directed search for argmin over columns of the column maxima of a lazy matrix.

Any evaluated subset of a column bounds that column's maximum from below.
The search repeatedly extends the column whose running maximum is smallest
and stops once that column has been evaluated completely: its exact maximum
then cannot exceed the lower bound of any other column.
"""

from __future__ import annotations

from concurrent.futures import Executor
from dataclasses import dataclass
from typing import Protocol

import numpy as np

from .geometry import ContractError


class MatrixOracle(Protocol):
    row_count: int
    col_count: int

    def eval(self, i: int, j: int) -> float: ...


class DenseMatrixOracle:
    """Wraps an explicit matrix; counts how many entries were read."""

    def __init__(self, matrix):
        self.matrix = np.asarray(matrix, dtype=np.float64)
        if self.matrix.ndim != 2:
            raise ContractError("matrix must be 2-D")
        self.row_count, self.col_count = self.matrix.shape
        self.calls = 0

    def eval(self, i: int, j: int) -> float:
        self.calls += 1
        return float(self.matrix[i, j])


@dataclass
class SearchState:
    col_max: np.ndarray
    col_count: np.ndarray
    evaluated: list[list[float]]

    @classmethod
    def from_first_row(cls, row) -> "SearchState":
        row = np.asarray(row, dtype=np.float64)
        return cls(
            col_max=row.copy(),
            col_count=np.ones(row.size, dtype=np.int64),
            evaluated=[[float(v)] for v in row],
        )


@dataclass
class MinMaxResult:
    j_hat: int
    eps_hat: float
    winning_column: np.ndarray
    evals_used: int
    state: SearchState


def directed_min_max(
    oracle: MatrixOracle,
    rng: np.random.Generator | None = None,
    executor: Executor | None = None,
) -> MinMaxResult:
    """Find ``argmin_j max_i E[i, j]`` while evaluating as few entries as possible.

    Column ties go to the lowest index unless ``rng`` is given, in which case
    one of the tied columns is drawn at random.  ``executor`` may be used to
    evaluate the (independent) first row in parallel.  Indices are 0-based.
    """
    R, C = oracle.row_count, oracle.col_count
    if R < 1 or C < 1:
        raise ContractError("matrix must have at least one row and one column")

    if executor is not None and C > 1:
        first = list(executor.map(lambda j: oracle.eval(0, j), range(C)))
    else:
        first = [oracle.eval(0, j) for j in range(C)]
    state = SearchState.from_first_row(first)
    col_max, col_count, evaluated = state.col_max, state.col_count, state.evaluated
    evals = C

    while True:
        if rng is None:
            j = int(np.argmin(col_max))
        else:
            tied = np.flatnonzero(col_max == col_max.min())
            j = int(tied[0] if tied.size == 1 else rng.choice(tied))
        c = int(col_count[j])
        if c == R:
            break
        v = oracle.eval(c, j)
        evals += 1
        evaluated[j].append(v)
        col_count[j] = c + 1
        if v > col_max[j]:
            col_max[j] = v

    return MinMaxResult(
        j_hat=j,
        eps_hat=float(col_max[j]),
        winning_column=np.asarray(evaluated[j]),
        evals_used=evals,
        state=state,
    )
