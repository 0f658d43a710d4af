"""CSV ingestion and JSON run reports."""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .builder import BuildConfig, BuildTrace, VertexSet, resolve
from .geometry import ContractError, PointSet

SCHEMA_VERSION = 1


class ParseError(ContractError):
    """Malformed CSV input."""


@dataclass(frozen=True)
class LoadedPoints:
    points: PointSet
    # row_map[r] is the retained index of data row r (0-based, header excluded)
    row_map: np.ndarray

    @property
    def rows_read(self) -> int:
        return int(self.row_map.size)

    @property
    def duplicates_removed(self) -> int:
        return self.rows_read - self.points.N


def parse_rows(lines, delimiter: str = ",", has_header: bool = False) -> np.ndarray:
    rows: list[list[float]] = []
    width = None
    reader = csv.reader(lines, delimiter=delimiter)
    for lineno, record in enumerate(reader, start=1):
        if has_header and lineno == 1:
            continue
        if not record or all(not cell.strip() for cell in record):
            continue
        if width is None:
            width = len(record)
        elif len(record) != width:
            raise ParseError(f"row {lineno}: expected {width} columns, found {len(record)}")
        row = []
        for col, cell in enumerate(record, start=1):
            try:
                value = float(cell)
            except ValueError:
                raise ParseError(f"row {lineno}, column {col}: cannot parse {cell!r} as a number") from None
            if not math.isfinite(value):
                raise ParseError(f"row {lineno}, column {col}: value {cell!r} is not finite")
            row.append(value)
        rows.append(row)
    if not rows:
        raise ContractError("input contains no data rows")
    return np.array(rows, dtype=np.float64)


def load_points(path, delimiter: str = ",", has_header: bool = False) -> LoadedPoints:
    """Read one point per row from a UTF-8 CSV file, removing duplicate rows."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = parse_rows(fh, delimiter=delimiter, has_header=has_header)
    points, row_map = PointSet.from_rows(rows)
    return LoadedPoints(points, row_map)


def make_report(
    loaded: LoadedPoints,
    config: BuildConfig,
    vertices: VertexSet,
    trace: BuildTrace,
    *,
    input_path: str | None = None,
) -> dict:
    res = resolve(loaded.points, config)
    X = loaded.points.points
    seen: set[int] = set()
    dup_map = {}
    for r, i in enumerate(loaded.row_map.tolist()):
        if i in seen:
            dup_map[str(r)] = i
        seen.add(i)
    return {
        "schema_version": SCHEMA_VERSION,
        "input": {
            "path": input_path,
            "rows_read": loaded.rows_read,
            "N": loaded.points.N,
            "n": loaded.points.n,
            "duplicates_removed": loaded.duplicates_removed,
            "duplicate_rows": dup_map,
        },
        "config": {
            "max_vertices": res.max_vertices,
            "epsilon_des": res.epsilon_des,
            "tol_interior": res.tol_interior,
            "tol_opt": res.tol_opt,
            "solver_max_iterations": res.max_iterations,
            "epsilon0": config.solver.epsilon0,
            "tie_mode": config.tie_mode,
            "seed": config.seed,
        },
        "vertices": {
            "indices": list(vertices.indices),
            "coordinates": X[list(vertices.indices)].tolist(),
        },
        "epsilon_achieved": vertices.epsilon_achieved,
        "trace": trace.to_dict(),
        "timing": {
            "solver_seconds": trace.solver_seconds,
            "search_seconds": trace.search_seconds,
            "total_seconds": trace.wall_seconds,
        },
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def write_report(report: dict, path) -> None:
    Path(path).write_text(dump_report(report), encoding="utf-8")
