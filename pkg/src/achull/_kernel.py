"""Compiled minimum-norm-point (Wolfe) projection.

Written with explicit index loops so numba can compile it: the greedy
search calls it tens of thousands of times per iteration, on corrals of a
handful of points, where numpy call overhead would dominate.
"""

import numpy as np
from numba import njit

# weight considered positive inside the minor cycle
POSITIVE = 1e-14

STATUS_OK = 0
STATUS_MAX_ITER = 1


@njit(cache=True, nogil=True)
def _affine_minimizer(Q, corral, m, out):
    # minimise w'Qw subject to sum(w) = 1 over the first m corral entries
    c = 0.0
    for a in range(m):
        d = abs(Q[corral[a], corral[a]])
        if d > c:
            c = d
    if c < 1e-300:
        c = 1e-300
    K = np.zeros((m + 1, m + 1))
    rhs = np.zeros(m + 1)
    for a in range(m):
        for b in range(m):
            K[a, b] = Q[corral[a], corral[b]]
        K[a, m] = c
        K[m, a] = c
    rhs[m] = c
    ok = True
    sol = np.zeros(m + 1)
    try:
        sol = np.linalg.solve(K, rhs)
    except Exception:
        ok = False
    if ok:
        for a in range(m + 1):
            if not np.isfinite(sol[a]):
                ok = False
    if not ok:
        sol = np.linalg.lstsq(K, rhs)[0]
    s = 0.0
    for a in range(m):
        s += sol[a]
    for a in range(m):
        out[a] = sol[a] / s


@njit(cache=True, nogil=True)
def min_norm_point(Y, tol, max_iterations):
    """Project the origin onto conv(rows of Y).

    Returns (weights, residual, gap, iterations, status).
    """
    k, n = Y.shape
    Q = Y @ Y.T
    weights = np.zeros(k)
    if k == 1:
        weights[0] = 1.0
        return weights, Y[0].copy(), 0.0, 0, STATUS_OK

    corral = np.empty(k + 1, dtype=np.int64)
    w = np.zeros(k + 1)
    v = np.zeros(k + 1)
    Qr = np.zeros(k)
    j0 = 0
    for j in range(1, k):
        if Q[j, j] < Q[j0, j0]:
            j0 = j
    corral[0] = j0
    w[0] = 1.0
    m = 1
    it = 0
    status = STATUS_OK
    gap = 0.0
    while True:
        for j in range(k):
            s = 0.0
            for a in range(m):
                s += Q[j, corral[a]] * w[a]
            Qr[j] = s
        rr = 0.0
        for a in range(m):
            rr += w[a] * Qr[corral[a]]
        jmin = 0
        for j in range(1, k):
            if Qr[j] < Qr[jmin]:
                jmin = j
        gap = rr - Qr[jmin]
        if gap <= tol:
            break
        present = False
        for a in range(m):
            if corral[a] == jmin:
                present = True
        if present:
            break
        it += 1
        if it > max_iterations:
            status = STATUS_MAX_ITER
            break
        corral[m] = jmin
        w[m] = 0.0
        m += 1
        while True:
            _affine_minimizer(Q, corral, m, v)
            allpos = True
            for a in range(m):
                if v[a] <= POSITIVE:
                    allpos = False
            if allpos:
                for a in range(m):
                    w[a] = v[a]
                break
            theta = 1.0
            drop = -1
            for a in range(m):
                if v[a] <= POSITIVE:
                    denom = w[a] - v[a]
                    ratio = w[a] / denom if denom > 0 else 0.0
                    if drop == -1 or ratio < theta:
                        theta = ratio
                        drop = a
            if theta > 1.0:
                theta = 1.0
            for a in range(m):
                w[a] = (1.0 - theta) * w[a] + theta * v[a]
            best = 0
            for a in range(1, m):
                if w[a] > w[best]:
                    best = a
            kept = 0
            total = 0.0
            for a in range(m):
                if a != drop and w[a] > POSITIVE:
                    corral[kept] = corral[a]
                    w[kept] = w[a]
                    total += w[a]
                    kept += 1
            if kept == 0:
                corral[0] = corral[best]
                w[0] = 1.0
                total = 1.0
                kept = 1
            m = kept
            for a in range(m):
                w[a] /= total

    total = 0.0
    for a in range(m):
        if w[a] >= 1e-12:
            weights[corral[a]] = w[a]
            total += w[a]
    if total == 0.0:
        weights[corral[0]] = 1.0
        total = 1.0
    r = np.zeros(n)
    for i in range(k):
        if weights[i] > 0.0:
            weights[i] /= total
            for d in range(n):
                r[d] += weights[i] * Y[i, d]
    return weights, r, gap, it, status


@njit(cache=True, nogil=True)
def hull_distance_indexed(X, candidates, z, tol, max_iterations):
    """Distance from X[z] to conv(X[candidates]); returns (distance, gap, status)."""
    k = candidates.shape[0]
    n = X.shape[1]
    Y = np.empty((k, n))
    for a in range(k):
        for d in range(n):
            Y[a, d] = X[candidates[a], d] - X[z, d]
    _, r, gap, _, status = min_norm_point(Y, tol, max_iterations)
    s = 0.0
    for d in range(n):
        s += r[d] * r[d]
    return np.sqrt(s), gap, status
