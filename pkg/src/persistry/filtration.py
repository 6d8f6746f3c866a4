"""Rips and Cech filtered complexes of dimension <= 2.

Filtration values use the distance/diameter convention: an edge enters at
the distance between its endpoints in both constructions, a Rips triangle
at its longest edge, and a Cech triangle at twice the radius of its
minimum enclosing ball. The two filtrations therefore share a time axis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cloud import DistanceMatrix, PointCloud, build_distance_matrix


@dataclass(frozen=True)
class Simplex:
    """Vertex indices (strictly increasing, 1-3 of them) with a filtration value."""

    vertices: tuple[int, ...]
    value: float

    def __post_init__(self):
        if not 1 <= len(self.vertices) <= 3:
            raise ValueError("only simplices of dimension <= 2 are supported")
        if any(b <= a for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValueError("simplex vertices must be strictly increasing")
        if self.value < 0:
            raise ValueError("filtration values must be non-negative")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def faces(self) -> list[tuple[int, ...]]:
        if self.dim == 0:
            return []
        return [
            tuple(v for k, v in enumerate(self.vertices) if k != drop)
            for drop in range(len(self.vertices))
        ]


@dataclass(frozen=True)
class Filtration:
    """Simplices sorted by (value, dimension, vertex list); faces never after cofaces."""

    simplices: tuple[Simplex, ...]
    kind: str
    max_value: float
    max_dim: int

    def __post_init__(self):
        if self.kind not in ("rips", "cech"):
            raise ValueError(f"unknown filtration kind: {self.kind}")
        if not 0 <= self.max_dim <= 2:
            raise ValueError("max_dim must be 0, 1 or 2")
        keys = [(s.value, s.dim, s.vertices) for s in self.simplices]
        if keys != sorted(keys):
            raise ValueError("simplices must be sorted by (value, dimension, vertices)")

    @property
    def vertex_count(self) -> int:
        return sum(1 for s in self.simplices if s.dim == 0)

    def __len__(self) -> int:
        return len(self.simplices)


def _sorted_filtration(simplices: list[Simplex], kind: str, max_value: float, max_dim: int) -> Filtration:
    ordered = sorted(simplices, key=lambda s: (s.value, s.dim, s.vertices))
    return Filtration(tuple(ordered), kind, max_value, max_dim)


def _default_max_value(dm: DistanceMatrix, kind: str) -> float:
    # past the largest possible simplex value the complex is complete, hence
    # contractible: the diameter for Rips, (2/sqrt(3)) * diameter for Cech
    factor = 1.1 if kind == "rips" else 1.2
    return factor * float(dm.entries.max(initial=0.0))


def rips_filtration(
    dm: DistanceMatrix,
    max_dim: int = 2,
    max_value: float | None = None,
) -> Filtration:
    """Vietoris-Rips filtration: a simplex enters once all its pairwise distances have."""
    if max_dim not in (1, 2):
        raise ValueError("max_dim must be 1 or 2")
    if max_value is None:
        max_value = _default_max_value(dm, "rips")
    if max_value <= 0:
        raise ValueError("max_value must be positive")
    n = dm.n
    d = dm.entries
    simplices = [Simplex((i,), 0.0) for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if d[i, j] <= max_value:
            simplices.append(Simplex((i, j), float(d[i, j])))
    if max_dim == 2:
        for i, j, k in itertools.combinations(range(n), 3):
            v = float(max(d[i, j], d[i, k], d[j, k]))
            if v <= max_value:
                simplices.append(Simplex((i, j, k), v))
    return _sorted_filtration(simplices, "rips", max_value, max_dim)


def cech_filtration(
    cloud: PointCloud,
    max_dim: int = 2,
    max_value: float | None = None,
) -> Filtration:
    """Cech filtration: a simplex enters when balls of radius value/2 share a point."""
    if max_dim not in (1, 2):
        raise ValueError("max_dim must be 1 or 2")
    dm = build_distance_matrix(cloud)
    if max_value is None:
        max_value = _default_max_value(dm, "cech")
    if max_value <= 0:
        raise ValueError("max_value must be positive")
    n = cloud.cardinality
    d = dm.entries
    simplices = [Simplex((i,), 0.0) for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if d[i, j] <= max_value:
            simplices.append(Simplex((i, j), float(d[i, j])))
    if max_dim == 2:
        for i, j, k in itertools.combinations(range(n), 3):
            _, radius = min_enclosing_ball([cloud.coords[i], cloud.coords[j], cloud.coords[k]])
            v = 2.0 * radius
            if v <= max_value:
                simplices.append(Simplex((i, j, k), v))
    return _sorted_filtration(simplices, "cech", max_value, max_dim)


def min_enclosing_ball(points: Sequence[Sequence[float]]) -> tuple[np.ndarray, float]:
    """Smallest ball containing 1-3 points of equal dimension: (center, radius).

    A pair gets its diametral ball; a triple gets the diametral ball of its
    longest side when that contains the third point, otherwise the
    circumscribed ball (computed in the triangle's own plane, any ambient
    dimension).
    """
    pts = [np.asarray(p, dtype=float) for p in points]
    if not 1 <= len(pts) <= 3:
        raise ValueError("min_enclosing_ball accepts 1 to 3 points")
    if len({p.shape for p in pts}) != 1:
        raise ValueError("points must share a dimension")
    if len(pts) == 1:
        return pts[0].copy(), 0.0
    if len(pts) == 2:
        center = (pts[0] + pts[1]) / 2.0
        return center, float(np.linalg.norm(pts[1] - pts[0]) / 2.0)

    # try the diametral ball of each side, longest first
    sides = sorted(
        itertools.combinations(range(3), 2),
        key=lambda ij: -float(np.linalg.norm(pts[ij[1]] - pts[ij[0]])),
    )
    for i, j in sides:
        center = (pts[i] + pts[j]) / 2.0
        radius = float(np.linalg.norm(pts[j] - pts[i]) / 2.0)
        k = ({0, 1, 2} - {i, j}).pop()
        if np.linalg.norm(pts[k] - center) <= radius * (1.0 + 1e-12) + 1e-15:
            return center, radius

    # acute triangle: circumcenter, solved in the plane spanned by two sides
    a, b, c = pts
    u, v = b - a, c - a
    gram = np.array([[u @ u, u @ v], [u @ v, v @ v]])
    rhs = 0.5 * np.array([u @ u, v @ v])
    try:
        s, t = np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError:
        # degenerate (collinear) triple: fall back to the longest diametral ball
        i, j = sides[0]
        center = (pts[i] + pts[j]) / 2.0
        return center, float(np.linalg.norm(pts[j] - pts[i]) / 2.0)
    center = a + s * u + t * v
    return center, float(np.linalg.norm(center - a))
