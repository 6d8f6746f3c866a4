from __future__ import annotations

import numpy as np
import pytest
from scipy.sparse.csgraph import minimum_spanning_tree as scipy_mst

from persistry import (
    DistanceMatrix,
    PointCloud,
    SparsityProfile,
    build_distance_matrix,
    degree_sparsity,
    hull_contains,
    minimum_spanning_edges,
    sparsity,
    tunneling,
    tunneling_oracle_2d,
)

TRIANGLE_3_4_5 = [("P", (0.0, 0.0)), ("Q", (4.0, 0.0)), ("R", (0.0, 3.0))]
UNIT_SQUARE = [("W", (0.0, 0.0)), ("X", (1.0, 0.0)), ("Y", (1.0, 1.0)), ("Z", (0.0, 1.0))]


def _random_cloud(rng: np.random.Generator, n: int, d: int, scale: float = 10.0) -> PointCloud:
    pts = rng.uniform(0.0, scale, size=(n, d))
    return PointCloud((f"p{i}", row) for i, row in enumerate(pts))


def test_point_cloud_basics(ring_cloud):
    assert len(ring_cloud) == 8
    assert ring_cloud.dim == 2
    assert tuple(ring_cloud.point("A")) == (49.0, 77.0)
    assert ring_cloud.labels == tuple("ABCDEFGH")


def test_point_cloud_rejects_bad_input():
    with pytest.raises(ValueError, match="at least one point"):
        PointCloud([])
    with pytest.raises(ValueError, match="duplicate point labels"):
        PointCloud([("a", (0.0,)), ("a", (1.0,))])
    with pytest.raises(ValueError, match="same number of coordinates"):
        PointCloud([("a", (0.0,)), ("b", (1.0, 2.0))])
    with pytest.raises(ValueError, match="finite"):
        PointCloud([("a", (0.0, float("nan")))])


def test_point_cloud_coords_are_read_only(ring_cloud):
    with pytest.raises(ValueError):
        ring_cloud.coords[0, 0] = 99.0


def test_scaled_cloud_scales_distances(ring_cloud):
    doubled = ring_cloud.scaled(2.0)
    assert sparsity(doubled) == pytest.approx(2.0 * sparsity(ring_cloud), rel=1e-12)
    stretched = ring_cloud.scaled((2.0, 1.0))
    assert stretched.point("A")[0] == 98.0
    assert stretched.point("A")[1] == 77.0


def test_distance_matrix_validation():
    ok = build_distance_matrix(PointCloud(UNIT_SQUARE))
    assert ok.n == 4
    assert ok.entries[0, 2] == pytest.approx(np.sqrt(2.0))
    with pytest.raises(ValueError, match="square"):
        DistanceMatrix(np.zeros((2, 3)))
    with pytest.raises(ValueError, match="symmetric"):
        DistanceMatrix(np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(ValueError, match="zero diagonal"):
        DistanceMatrix(np.array([[1.0, 1.0], [1.0, 0.0]]))
    with pytest.raises(ValueError, match="triangle inequality"):
        DistanceMatrix(np.array([[0.0, 1.0, 3.0], [1.0, 0.0, 1.0], [3.0, 1.0, 0.0]]))


def test_sparsity_is_min_pairwise_distance(ring_cloud):
    m = build_distance_matrix(ring_cloud).entries
    expected = min(m[i, j] for i in range(8) for j in range(i + 1, 8))
    assert sparsity(ring_cloud) == expected
    assert sparsity(ring_cloud) == pytest.approx(16.6433169771, abs=1e-9)


def test_sparsity_needs_two_points():
    with pytest.raises(ValueError, match="fewer than two"):
        sparsity(PointCloud([("only", (1.0, 2.0))]))


def test_mst_tie_break_is_lexicographic():
    dm = build_distance_matrix(PointCloud(UNIT_SQUARE))
    edges = minimum_spanning_edges(dm)
    assert edges == [(1.0, 0, 1), (1.0, 0, 3), (1.0, 1, 2)]


def test_degree_sparsity_matches_scipy_mst():
    rng = np.random.default_rng(42)
    for _ in range(10):
        n = int(rng.integers(2, 15))
        d = int(rng.integers(1, 6))
        cloud = _random_cloud(rng, n, d)
        profile = degree_sparsity(cloud)
        dense = build_distance_matrix(cloud).entries
        reference = np.sort(scipy_mst(dense).toarray().ravel())[-(n - 1):]
        assert profile.values == pytest.approx(reference, rel=1e-12)
        assert profile.sparsity == pytest.approx(dense[np.triu_indices(n, k=1)].min())
        assert profile.top_line == profile.values[-1]


def test_sparsity_profile_must_be_nondecreasing():
    with pytest.raises(ValueError, match="nondecreasing"):
        SparsityProfile(np.array([2.0, 1.0]))
    with pytest.raises(ValueError, match="non-empty"):
        SparsityProfile(np.array([]))


def test_hull_contains_square():
    cloud = PointCloud(UNIT_SQUARE)
    assert hull_contains(cloud, (0.5, 0.5))
    assert hull_contains(cloud, (0.0, 0.0))  # vertex
    assert hull_contains(cloud, (0.5, 0.0))  # edge midpoint
    assert not hull_contains(cloud, (1.5, 0.5))
    assert not hull_contains(cloud, (-0.001, 0.5))


def test_hull_contains_checks_dimension(ring_cloud):
    with pytest.raises(ValueError, match="coordinates"):
        hull_contains(ring_cloud, (1.0, 2.0, 3.0))


def test_hull_contains_high_dimension():
    rng = np.random.default_rng(7)
    cloud = _random_cloud(rng, 16, 12, scale=100.0)
    assert hull_contains(cloud, cloud.coords.mean(axis=0))
    assert not hull_contains(cloud, cloud.coords.max(axis=0) + 1.0)


def test_tunneling_right_triangle_is_inscribed_circle():
    # legs 3 and 4: the inscribed circle has radius 1, so diameter 2
    est = tunneling(PointCloud(TRIANGLE_3_4_5), seed=0)
    assert est.diameter == pytest.approx(2.0, abs=1e-6)


def test_tunneling_unit_square():
    est = tunneling(PointCloud(UNIT_SQUARE), seed=0)
    assert est.diameter == pytest.approx(1.0, abs=1e-6)


def test_tunneling_one_dimensional_is_largest_gap():
    cloud = PointCloud([("a", (0.0,)), ("b", (1.0,)), ("c", (5.0,)), ("d", (6.0,))])
    assert tunneling(cloud, seed=3).diameter == pytest.approx(4.0)


def test_tunneling_degenerate_cloud_is_zero():
    collinear = PointCloud([("a", (0.0, 0.0)), ("b", (1.0, 1.0)), ("c", (2.0, 2.0))])
    assert tunneling(collinear, seed=0).diameter == 0.0
    pair = PointCloud([("a", (0.0, 0.0)), ("b", (2.0, 2.0))])
    assert tunneling(pair, seed=0).diameter == 0.0
    with pytest.raises(ValueError, match="fewer than two"):
        tunneling(PointCloud([("solo", (3.0, 4.0))]), seed=0)


def test_tunneling_ball_is_empty_and_centered_inside():
    rng = np.random.default_rng(11)
    for seed in range(4):
        cloud = _random_cloud(rng, 12, 2)
        est = tunneling(cloud, seed=seed)
        assert hull_contains(cloud, est.center)
        nearest = np.linalg.norm(cloud.coords - est.center, axis=1).min()
        assert 2.0 * nearest >= est.diameter - 1e-6


def test_tunneling_is_deterministic(ring_cloud):
    a = tunneling(ring_cloud, seed=5)
    b = tunneling(ring_cloud, seed=5)
    assert a.diameter == b.diameter
    assert np.array_equal(a.center, b.center)


def test_tunneling_scale_covariance(ring_cloud):
    base = tunneling(ring_cloud, seed=0).diameter
    scaled = tunneling(ring_cloud.scaled(3.0), seed=0).diameter
    assert scaled == pytest.approx(3.0 * base, rel=1e-5)


def test_tunneling_tracks_grid_oracle():
    rng = np.random.default_rng(2024)
    for _ in range(5):
        cloud = _random_cloud(rng, int(rng.integers(5, 15)), 2)
        est = tunneling(cloud, seed=1)
        oracle = tunneling_oracle_2d(cloud, resolution=600)
        assert est.diameter == pytest.approx(oracle.diameter, rel=0.06)


def test_tunneling_oracle_requires_planar_input():
    rng = np.random.default_rng(1)
    with pytest.raises(ValueError, match="planar"):
        tunneling_oracle_2d(_random_cloud(rng, 5, 3))


def test_tunneling_oracle_right_triangle():
    oracle = tunneling_oracle_2d(PointCloud(TRIANGLE_3_4_5), resolution=800)
    assert oracle.diameter == pytest.approx(2.0, abs=0.01)
