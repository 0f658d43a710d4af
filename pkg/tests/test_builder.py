import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from achull.builder import (
    BuildConfig,
    VertexSet,
    build,
    coverage,
    detect_interior,
    greedy_step,
    initialize,
    prune_vertices,
    resolve,
)
from achull.geometry import ContractError, PointSet, distance_to_hull
from achull.oracle import exact_hull_2d, full_min_max, is_extreme, reference_projection


def P(rows):
    return PointSet(np.asarray(rows, dtype=float))


# -- initialize ---------------------------------------------------------------

def test_initialize_unique_minimum():
    assert initialize(P([[0, 0], [1, 0], [0, 1]])).indices == (0,)


def test_initialize_lexicographic_tie():
    assert initialize(P([[1, 5], [1, 2], [3, 0]])).indices == (1,)


def test_initialize_is_extreme(rng):
    pts = P(rng.normal(size=(50, 4)))
    (i,) = initialize(pts).indices
    assert is_extreme(i, pts, 1e-7)


# -- greedy_step --------------------------------------------------------------

def test_greedy_single_active():
    pts = P([[0, 0], [1, 1]])
    step = greedy_step(pts, [1], VertexSet((0,)), BuildConfig())
    assert (step.j_hat, step.eps_hat) == (1, 0.0)


def test_greedy_collinear_endpoint():
    pts = P([[0], [1], [2], [3]])
    step = greedy_step(pts, [1, 2, 3], VertexSet((0,)), BuildConfig())
    assert step.j_hat == 3
    assert step.eps_hat == pytest.approx(0.0, abs=1e-12)
    np.testing.assert_allclose(step.winning_column, 0.0, atol=1e-15)


def test_greedy_matches_exhaustive(rng):
    for _ in range(5):
        pts = P(rng.normal(size=(15, 2)))
        E0 = initialize(pts)
        active = [i for i in range(15) if i not in E0.indices]
        step = greedy_step(pts, active, E0, BuildConfig())
        X = pts.points
        ref = np.array([
            [reference_projection(X[zi], X[list(E0.indices) + [xj]]).distance for xj in active]
            for zi in active
        ])
        j_ref, eps_ref = full_min_max(ref)
        assert step.j_hat == active[j_ref]
        assert step.eps_hat == pytest.approx(eps_ref, abs=1e-6)


def test_greedy_value_exact_against_full_matrix(rng):
    pts = P(rng.normal(size=(12, 3)))
    X = pts.points
    E0 = VertexSet((0, 5))
    active = [i for i in range(12) if i not in E0.indices]
    step = greedy_step(pts, active, E0, BuildConfig())
    full = np.array([
        [0.0 if zi == xj else distance_to_hull(X[zi], X[list(E0.indices) + [xj]]).distance for xj in active]
        for zi in active
    ])
    j, eps = full_min_max(full)
    assert step.eps_hat == pytest.approx(eps, rel=1e-12, abs=1e-15)
    assert step.j_hat == active[j]


def test_greedy_rejects_empty_active():
    with pytest.raises(ContractError):
        greedy_step(P([[0.0]]), [], VertexSet((0,)), BuildConfig())


# -- detect_interior ----------------------------------------------------------

def test_detect_interior_zeros():
    assert detect_interior([0.0, 2.0, 0.0, 4.0], [10, 11, 12, 13], 1e-9) == [10, 12]


def test_detect_interior_excludes_chosen():
    assert detect_interior([0.0, 2.0, 0.0, 4.0], [10, 11, 12, 13], 1e-9, chosen=12) == [10]


def test_detect_interior_none():
    assert detect_interior([1.0, 2.0], [0, 1], 1e-9) == []


def test_square_center_flagged(square_center):
    vertices = VertexSet((0, 1, 2))
    step = greedy_step(square_center, [3, 4], vertices, BuildConfig())
    assert step.j_hat == 3
    res = resolve(square_center, BuildConfig())
    assert detect_interior(step.winning_column, [3, 4], res.tol_interior, chosen=3) == [4]
    assert reference_projection(square_center[4], square_center[[0, 1, 2, 3]]).distance <= 1e-9


# -- prune_vertices -----------------------------------------------------------

def test_prune_triangle_unchanged():
    pts = P([[0, 0], [1, 0], [0, 1]])
    assert prune_vertices(pts, VertexSet((0, 1, 2)), BuildConfig()).indices == (0, 1, 2)


def test_prune_segment_midpoint():
    pts = P([[0, 0], [2, 0], [1, 0]])
    assert prune_vertices(pts, VertexSet((0, 1, 2)), BuildConfig()).indices == (0, 1)


def test_prune_random_interiors(rng):
    for _ in range(10):
        angles = np.sort(rng.uniform(0, 2 * np.pi, 4))
        corners = np.c_[np.cos(angles), np.sin(angles)] * rng.uniform(1, 3)
        inner = rng.dirichlet(np.ones(4), size=2) @ corners
        X = np.vstack([inner[:1], corners[:2], inner[1:], corners[2:]])
        pts = P(X)
        kept = prune_vertices(pts, VertexSet(tuple(range(6))), BuildConfig()).indices
        assert kept == (1, 2, 4, 5)
        assert {i for i in range(6) if is_extreme(i, X, 1e-7)} == set(kept)


# -- build --------------------------------------------------------------------

def test_build_singleton():
    v, trace = build(P([[1.0, 2.0]]))
    assert v.indices == (0,)
    assert v.epsilon_achieved == 0.0
    assert trace.K == 0


def test_build_square_center(square_center):
    v, trace = build(square_center, BuildConfig(max_vertices=5, epsilon_des=0.0))
    assert set(v.indices) == set(exact_hull_2d(square_center)) == {0, 1, 2, 3}
    assert v.epsilon_achieved == 0.0


def test_build_full_reduction_matches_gift_wrapping(rng):
    pts = P(rng.normal(size=(50, 2)))
    v, trace = build(pts, BuildConfig(max_vertices=50))
    assert set(v.indices) == set(exact_hull_2d(pts))
    res = resolve(pts, BuildConfig())
    assert coverage(pts, v).max() <= res.tol_interior


def test_build_budget_one(rng):
    X = rng.normal(size=(10, 3))
    pts = P(X)
    v, trace = build(pts, BuildConfig(max_vertices=1))
    assert trace.K == 0 and len(v) == 1
    assert v.epsilon_achieved == pytest.approx(np.linalg.norm(X - X[v.indices[0]], axis=1).max())


def test_build_epsilon_target_stops_early(rng):
    pts = P(rng.normal(size=(60, 3)))
    loose, t1 = build(pts, BuildConfig(epsilon_des=1.0))
    tight, t2 = build(pts, BuildConfig(epsilon_des=0.0))
    assert loose.epsilon_achieved <= 1.0
    assert t1.K < t2.K
    assert len(loose) < len(tight)


def test_build_rejects_bad_config():
    with pytest.raises(ContractError):
        BuildConfig(max_vertices=0)
    with pytest.raises(ContractError):
        BuildConfig(epsilon_des=-1.0)
    with pytest.raises(ContractError):
        BuildConfig(tol_interior=0.0)
    with pytest.raises(ContractError):
        BuildConfig(tie_mode="coin")


def test_build_random_ties_still_cover(rng):
    # grid points produce many exact ties
    g = np.array([[i, j] for i in range(4) for j in range(4)], dtype=float)
    pts = P(g)
    for seed in range(3):
        v, _ = build(pts, BuildConfig(tie_mode="random", seed=seed))
        assert set(v.indices) == {0, 3, 12, 15}


def test_build_threads_same_result(rng):
    pts = P(rng.normal(size=(40, 5)))
    a, ta = build(pts, BuildConfig(max_vertices=8))
    b, tb = build(pts, BuildConfig(max_vertices=8, threads=4))
    assert a == b
    assert ta.eps_sequence == tb.eps_sequence


def _check_invariants(pts, config, v, trace):
    res = resolve(pts, config)
    eps = trace.eps_sequence
    assert all(b <= a + 1e-9 for a, b in zip(eps, eps[1:]))
    assert coverage(pts, v).max() <= v.epsilon_achieved + res.tol_interior
    assert len(set(v.indices)) == len(v.indices)
    assert all(0 <= i < pts.N for i in v.indices)
    assert trace.K <= min(res.max_vertices, pts.N)
    assert len(v) <= trace.K + 1
    assert v.epsilon_achieved >= 0


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 25), st.integers(1, 4), st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_build_invariants(N, n, V, seed):
    X = np.random.default_rng(seed).normal(size=(N, n))
    pts, _ = PointSet.from_rows(X)
    config = BuildConfig(max_vertices=V)
    v, trace = build(pts, config)
    _check_invariants(pts, config, v, trace)
    assert len(v) <= V


@settings(max_examples=20, deadline=None)
@given(st.integers(3, 30), st.integers(0, 2**32 - 1))
def test_full_budget_gives_exact_hull(N, seed):
    X = np.random.default_rng(seed).normal(size=(N, 3))
    pts = P(X)
    config = BuildConfig()
    v, trace = build(pts, config)
    _check_invariants(pts, config, v, trace)
    assert coverage(pts, v).max() <= resolve(pts, config).tol_interior
    assert set(v.indices) == {i for i in range(N) if is_extreme(i, X, 1e-7)}
