"""Slow, simple reference implementations used to check the fast paths.

Nothing here shares code with the production solver or search: the
projection uses accelerated projected gradient on the simplex, the min-max
evaluates every entry, and the 2-D hull is plain gift wrapping.
"""

from __future__ import annotations

import numpy as np

from .geometry import ContractError, ConvergenceError, PointSet, Projection


def full_min_max(matrix) -> tuple[int, float]:
    """Column with the smallest maximum (lowest index on ties) and that maximum."""
    E = np.asarray(matrix, dtype=np.float64)
    if E.ndim != 2 or E.size == 0:
        raise ContractError("matrix must be nonempty and 2-D")
    col_max = E.max(axis=0)
    j = int(np.argmin(col_max))
    return j, float(col_max[j])


def project_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection of ``v`` onto the unit simplex (sort-based)."""
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    ind = np.arange(1, v.size + 1)
    rho = np.nonzero(u - css / ind > 0)[0][-1]
    theta = css[rho] / (rho + 1.0)
    return np.maximum(v - theta, 0.0)


def reference_projection(
    z, candidates, tol: float = 1e-14, dist_tol: float = 1e-10, max_iterations: int = 200_000
) -> Projection:
    """Projection onto conv(candidates) by accelerated projected gradient.

    Runs FISTA with a 1/L step and gradient-based restarts.  The
    Frank-Wolfe duality gap bounds the suboptimality of the squared
    distance f, so the true distance lies in [sqrt(f - gap), sqrt(f)].
    Stops once the gap is below ``tol * scale**2`` or that bracket is
    narrower than ``dist_tol * scale``; the second test matters for
    near-duplicate candidates, where the gap itself decays very slowly.
    """
    X = candidates.points if isinstance(candidates, PointSet) else np.asarray(candidates, dtype=np.float64)
    z = np.asarray(z, dtype=np.float64)
    if X.ndim != 2 or X.shape[0] < 1 or z.shape != (X.shape[1],):
        raise ContractError("dimension mismatch")
    Y = X - z
    k = Y.shape[0]
    Q = Y @ Y.T
    scale = max(float(np.max(np.diag(Q))), 1e-300)
    L = max(float(np.linalg.eigvalsh(Q)[-1]), 1e-300)

    # start at the best vertex
    a = np.zeros(k)
    a[int(np.argmin(np.diag(Q)))] = 1.0
    y, t = a.copy(), 1.0
    gap = np.inf
    for it in range(max_iterations):
        grad_a = Q @ a
        f = float(a @ grad_a)
        gap = f - float(grad_a.min())
        if gap <= tol * scale:
            break
        if np.sqrt(max(f, 0.0)) - np.sqrt(max(f - gap, 0.0)) <= dist_tol * np.sqrt(scale):
            break
        grad = Q @ y
        a_next = project_simplex(y - grad / L)
        t_next = 0.5 * (1.0 + np.sqrt(1.0 + 4.0 * t * t))
        if (y - a_next) @ (a_next - a) > 0:
            # momentum points uphill: restart
            y, t = a_next.copy(), 1.0
        else:
            y = a_next + ((t - 1.0) / t_next) * (a_next - a)
            t = t_next
        a = a_next
    else:
        raise ConvergenceError(f"reference projection stalled (gap {gap:.3e})", gap=gap)

    r = a @ Y
    p = z + r
    return Projection(
        distance=float(np.linalg.norm(r)),
        weights=a,
        point=p,
        gap=float(np.max((X - p) @ (z - p))),
        iterations=it,
    )


def is_extreme(i: int, points, tol: float) -> bool:
    """True iff point ``i`` is farther than ``tol`` from the hull of the others."""
    X = points.points if isinstance(points, PointSet) else np.asarray(points, dtype=np.float64)
    if X.shape[0] < 2:
        raise ContractError("need at least two points")
    others = np.delete(X, i, axis=0)
    return reference_projection(X[i], others).distance > tol


def _cross(o: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    return float((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]))


def exact_hull_2d(points) -> list[int]:
    """Vertices of the planar convex hull, counter-clockwise, by gift wrapping.

    Points lying on an edge between two vertices are not reported.
    Starts from the lexicographically smallest point.
    """
    X = points.points if isinstance(points, PointSet) else np.asarray(points, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != 2:
        raise ContractError("exact_hull_2d needs 2-D points")
    N = X.shape[0]
    if N == 1:
        return [0]
    start = min(range(N), key=lambda i: (X[i, 0], X[i, 1]))
    hull = [start]
    current = start
    while True:
        cand = (current + 1) % N
        for q in range(N):
            if q == current:
                continue
            c = _cross(X[current], X[cand], X[q])
            if c < 0:
                cand = q
            elif c == 0:
                # collinear: keep the farther one so edge points are skipped
                d_q = np.sum((X[q] - X[current]) ** 2)
                d_c = np.sum((X[cand] - X[current]) ** 2)
                if d_q > d_c:
                    cand = q
        current = cand
        if current == start:
            break
        hull.append(current)
        if len(hull) > N:
            raise RuntimeError("gift wrapping failed to close")
    return hull
