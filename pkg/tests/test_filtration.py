from __future__ import annotations

import math

import numpy as np
import pytest

from persistry import (
    Filtration,
    PointCloud,
    Simplex,
    build_distance_matrix,
    cech_filtration,
    min_enclosing_ball,
    rips_filtration,
)


def _cloud(points) -> PointCloud:
    return PointCloud((f"p{i}", p) for i, p in enumerate(points))


def test_simplex_validation():
    assert Simplex((0,), 0.0).dim == 0
    assert Simplex((1, 4), 2.5).dim == 1
    with pytest.raises(ValueError, match="strictly increasing"):
        Simplex((2, 1), 1.0)
    with pytest.raises(ValueError, match="strictly increasing"):
        Simplex((1, 1), 1.0)
    with pytest.raises(ValueError, match="dimension"):
        Simplex((0, 1, 2, 3), 1.0)
    with pytest.raises(ValueError, match="non-negative"):
        Simplex((0,), -0.5)


def test_simplex_faces():
    assert Simplex((0,), 0.0).faces() == []
    assert Simplex((2, 5), 1.0).faces() == [(5,), (2,)]
    assert sorted(Simplex((0, 1, 2), 1.0).faces()) == [(0, 1), (0, 2), (1, 2)]


def test_filtration_requires_sorted_simplices():
    good = (Simplex((0,), 0.0), Simplex((1,), 0.0), Simplex((0, 1), 1.0))
    Filtration(good, "rips", 2.0, 1)
    with pytest.raises(ValueError, match="sorted"):
        Filtration(good[::-1], "rips", 2.0, 1)
    with pytest.raises(ValueError, match="kind"):
        Filtration(good, "alpha", 2.0, 1)


def test_rips_values_come_from_distances(ring_cloud):
    dm = build_distance_matrix(ring_cloud)
    filt = rips_filtration(dm, max_dim=2)
    by_verts = {s.vertices: s.value for s in filt.simplices}
    assert filt.vertex_count == 8
    for i in range(8):
        assert by_verts[(i,)] == 0.0
    for i in range(8):
        for j in range(i + 1, 8):
            assert by_verts[(i, j)] == dm.entries[i, j]
    for i, j, k in [(0, 1, 2), (2, 5, 7), (0, 3, 6)]:
        expected = max(dm.entries[i, j], dm.entries[i, k], dm.entries[j, k])
        assert by_verts[(i, j, k)] == expected


def test_rips_max_value_prunes_simplices(ring_cloud):
    dm = build_distance_matrix(ring_cloud)
    capped = rips_filtration(dm, max_dim=2, max_value=40.0)
    assert all(s.value <= 40.0 for s in capped.simplices)
    full = rips_filtration(dm, max_dim=2)
    assert len(capped) < len(full)
    # the complete filtration ends contractible: every pair is joined
    assert sum(1 for s in full.simplices if s.dim == 1) == 8 * 7 // 2


def test_rips_is_sorted_and_faces_precede_cofaces(ring_cloud):
    filt = rips_filtration(build_distance_matrix(ring_cloud), max_dim=2)
    seen = set()
    for s in filt.simplices:
        for face in s.faces():
            assert face in seen
        seen.add(s.vertices)


def test_rips_rejects_bad_arguments(ring_cloud):
    dm = build_distance_matrix(ring_cloud)
    with pytest.raises(ValueError, match="max_dim"):
        rips_filtration(dm, max_dim=3)
    with pytest.raises(ValueError, match="max_value"):
        rips_filtration(dm, max_value=0.0)


def test_cech_shares_edges_with_rips(ring_cloud):
    dm = build_distance_matrix(ring_cloud)
    rips_edges = {s.vertices: s.value for s in rips_filtration(dm, max_dim=1).simplices if s.dim == 1}
    cech_edges = {s.vertices: s.value for s in cech_filtration(ring_cloud, max_dim=1).simplices if s.dim == 1}
    assert rips_edges == cech_edges


def test_cech_triangle_values():
    # right triangle: the hypotenuse's diametral ball covers it, so both
    # filtrations give the longest edge
    right = _cloud([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)])
    tri = [s for s in cech_filtration(right, max_dim=2).simplices if s.dim == 2]
    assert tri[0].value == pytest.approx(5.0)

    # equilateral: circumscribed ball is strictly bigger than half the side
    s = 2.0
    equi = _cloud([(0.0, 0.0), (s, 0.0), (s / 2.0, s * math.sqrt(3) / 2.0)])
    tri = [x for x in cech_filtration(equi, max_dim=2).simplices if x.dim == 2]
    assert tri[0].value == pytest.approx(2.0 * s / math.sqrt(3.0))


def test_rips_cech_interleaving_on_random_triangles():
    # per triangle: rips value <= cech value <= (2/sqrt(3)) * rips value
    rng = np.random.default_rng(99)
    for _ in range(50):
        cloud = _cloud(rng.uniform(0.0, 10.0, size=(3, 2)))
        rips_tri = [s for s in rips_filtration(build_distance_matrix(cloud), max_dim=2).simplices if s.dim == 2]
        cech_tri = [s for s in cech_filtration(cloud, max_dim=2).simplices if s.dim == 2]
        r, c = rips_tri[0].value, cech_tri[0].value
        assert r <= c + 1e-12
        assert c <= 2.0 / math.sqrt(3.0) * r + 1e-12


def test_filtrations_are_deterministic(ring_cloud):
    dm = build_distance_matrix(ring_cloud)
    assert rips_filtration(dm).simplices == rips_filtration(dm).simplices
    assert cech_filtration(ring_cloud).simplices == cech_filtration(ring_cloud).simplices


def test_min_enclosing_ball_small_cases():
    center, radius = min_enclosing_ball([(3.0, 4.0)])
    assert radius == 0.0 and tuple(center) == (3.0, 4.0)

    center, radius = min_enclosing_ball([(0.0, 0.0), (2.0, 0.0)])
    assert radius == pytest.approx(1.0) and tuple(center) == (1.0, 0.0)

    # obtuse: longest side's diametral ball contains the third point
    center, radius = min_enclosing_ball([(0.0, 0.0), (10.0, 0.0), (5.0, 1.0)])
    assert radius == pytest.approx(5.0)

    # equilateral: circumradius s / sqrt(3)
    s = 3.0
    _, radius = min_enclosing_ball([(0.0, 0.0), (s, 0.0), (s / 2.0, s * math.sqrt(3) / 2.0)])
    assert radius == pytest.approx(s / math.sqrt(3.0))

    # collinear triple falls back to the span
    _, radius = min_enclosing_ball([(0.0, 0.0), (1.0, 1.0), (4.0, 4.0)])
    assert radius == pytest.approx(2.0 * math.sqrt(2.0))


def test_min_enclosing_ball_in_higher_dimension():
    # acute triangle embedded in 4-D keeps its planar circumradius
    a = (0.0, 0.0, 1.0, 1.0)
    b = (2.0, 0.0, 1.0, 1.0)
    c = (1.0, 2.0, 1.0, 1.0)
    center, radius = min_enclosing_ball([a, b, c])
    for p in (a, b, c):
        assert np.linalg.norm(np.array(p) - center) == pytest.approx(radius)


def test_min_enclosing_ball_validation():
    with pytest.raises(ValueError, match="1 to 3"):
        min_enclosing_ball([(0.0,)] * 4)
    with pytest.raises(ValueError, match="share a dimension"):
        min_enclosing_ball([(0.0, 1.0), (0.0,)])
