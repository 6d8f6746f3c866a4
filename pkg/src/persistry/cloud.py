"""Point clouds, Euclidean geometry, and the two cloud-level roster metrics.

A cloud is a finite set of labeled points in R^d (players as stat vectors).
This module derives the distance matrix, the sparsity profile (single-linkage
merge distances), convex-hull membership, and the tunneling constant: the
diameter of the largest ball that fits inside the convex hull without
touching any cloud point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import linprog, minimize, nnls
from scipy.spatial import ConvexHull, QhullError

HULL_FEASIBILITY_TOL = 1e-8


class PointCloud:
    """Labeled points in R^d. Immutable; labels unique; cardinality >= 1."""

    def __init__(self, points: Iterable[tuple[str, Sequence[float]]]):
        pairs = list(points)
        if not pairs:
            raise ValueError("a point cloud needs at least one point")
        labels = tuple(str(label) for label, _ in pairs)
        if len(set(labels)) != len(labels):
            dupes = sorted({l for l in labels if labels.count(l) > 1})
            raise ValueError(f"duplicate point labels: {', '.join(dupes)}")
        rows = [list(map(float, c)) for _, c in pairs]
        if len({len(r) for r in rows}) != 1:
            raise ValueError("all points must have the same number of coordinates")
        coords = np.asarray(rows, dtype=float)
        if not np.all(np.isfinite(coords)):
            raise ValueError("point coordinates must be finite")
        coords.flags.writeable = False
        self.labels = labels
        self.coords = coords

    @property
    def dim(self) -> int:
        return self.coords.shape[1]

    @property
    def cardinality(self) -> int:
        return self.coords.shape[0]

    def point(self, label: str) -> np.ndarray:
        return self.coords[self.labels.index(label)]

    def scaled(self, factors: float | Sequence[float]) -> "PointCloud":
        """New cloud with per-coordinate scaling applied (a single factor broadcasts)."""
        f = np.broadcast_to(np.asarray(factors, dtype=float), (self.dim,))
        return PointCloud(zip(self.labels, self.coords * f))

    def __len__(self) -> int:
        return self.cardinality

    def __repr__(self) -> str:
        return f"PointCloud(n={self.cardinality}, dim={self.dim})"


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric pairwise Euclidean distances with a zero diagonal."""

    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("distance matrix must be square")
        scale = max(1.0, float(m.max(initial=0.0)))
        if np.any(m < 0) or not np.allclose(m, m.T, atol=1e-9 * scale):
            raise ValueError("distance matrix must be symmetric and non-negative")
        if np.any(np.abs(np.diag(m)) > 1e-9 * scale):
            raise ValueError("distance matrix must have a zero diagonal")
        # triangle inequality, allowing 1e-9 slack for float noise
        if m.shape[0] <= 64:
            lhs = m[:, :, None]
            rhs = m[:, None, :] + m[None, :, :]
            if np.any(lhs > rhs + 1e-9 * scale):
                raise ValueError("distance matrix violates the triangle inequality")
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True)
class SparsityProfile:
    """Nondecreasing single-linkage merge distances; first entry is the sparsity."""

    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1 or v.size < 1:
            raise ValueError("sparsity profile must be a non-empty vector")
        if np.any(np.diff(v) < 0):
            raise ValueError("sparsity profile must be nondecreasing")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @property
    def sparsity(self) -> float:
        return float(self.values[0])

    @property
    def top_line(self) -> float:
        return float(self.values[-1])


@dataclass(frozen=True)
class TunnelingEstimate:
    """Largest-empty-ball estimate: diameter, its center, and how it was found."""

    diameter: float
    center: np.ndarray
    method: str
    starts_used: int


def build_distance_matrix(cloud: PointCloud) -> DistanceMatrix:
    """Pairwise Euclidean distances between all cloud points."""
    diff = cloud.coords[:, None, :] - cloud.coords[None, :, :]
    m = np.sqrt((diff * diff).sum(axis=-1))
    np.fill_diagonal(m, 0.0)
    m = np.minimum(m, m.T)  # exact symmetry regardless of summation order
    return DistanceMatrix(m)


def sparsity(cloud: PointCloud) -> float:
    """Minimal pairwise distance in the cloud."""
    if cloud.cardinality < 2:
        raise ValueError("sparsity undefined for fewer than two points")
    m = build_distance_matrix(cloud).entries
    iu = np.triu_indices(cloud.cardinality, k=1)
    return float(m[iu].min())


def minimum_spanning_edges(dm: DistanceMatrix) -> list[tuple[float, int, int]]:
    """Kruskal MST edges as (weight, i, j), ties broken by point-index order."""
    n = dm.n
    edges = sorted(
        (float(dm.entries[i, j]), i, j) for i in range(n) for j in range(i + 1, n)
    )
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = []
    for w, i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            chosen.append((w, i, j))
            if len(chosen) == n - 1:
                break
    return chosen


def degree_sparsity(cloud: PointCloud) -> SparsityProfile:
    """Progressive merge distances: the n-1 MST edge lengths, nondecreasing.

    These are exactly the finite death values of the dimension-0 barcode.
    """
    if cloud.cardinality < 2:
        raise ValueError("sparsity undefined for fewer than two points")
    dm = build_distance_matrix(cloud)
    weights = sorted(w for w, _, _ in minimum_spanning_edges(dm))
    return SparsityProfile(np.array(weights))


def hull_contains(cloud: PointCloud, query: Sequence[float]) -> bool:
    """Whether query is a convex combination of the cloud's points.

    Decided by a non-negative least-squares feasibility solve; residuals up
    to 1e-8 of the coordinate scale count as inside.
    """
    q = np.asarray(query, dtype=float)
    if q.shape != (cloud.dim,):
        raise ValueError(f"query has {q.size} coordinates, cloud is {cloud.dim}-dimensional")
    scale = max(1.0, float(np.abs(cloud.coords).max()), float(np.abs(q).max()))
    a = np.vstack([cloud.coords.T / scale, np.ones(cloud.cardinality)])
    b = np.concatenate([q / scale, [1.0]])
    _, residual = nnls(a, b)
    return residual <= HULL_FEASIBILITY_TOL


def _affine_rank(points: np.ndarray) -> int:
    centered = points - points.mean(axis=0)
    scale = float(np.abs(centered).max(initial=0.0))
    if scale == 0.0:
        return 0
    return int(np.linalg.matrix_rank(centered, tol=1e-10 * scale))


class _HullFrame:
    """Half-space view of the hull used to measure distance to its boundary.

    Facet equations come from qhull when it succeeds; otherwise a
    deterministic probe set of support half-spaces approximates the hull
    from outside (boundary distances are then upper estimates).
    """

    def __init__(self, points: np.ndarray, normals: np.ndarray, offsets: np.ndarray, exact: bool):
        self.points = points
        self.normals = normals  # unit rows a with a @ x <= b inside
        self.offsets = offsets
        self.exact = exact

    @classmethod
    def build(cls, points: np.ndarray, seed: int) -> "_HullFrame":
        n, d = points.shape
        try:
            hull = ConvexHull(points)
            eq = hull.equations  # rows (a, b'): a @ x + b' <= 0, |a| = 1
            return cls(points, eq[:, :d].copy(), -eq[:, d].copy(), exact=True)
        except QhullError:
            pass
        centroid = points.mean(axis=0)
        dirs = [np.eye(d), -np.eye(d), points - centroid]
        rng = np.random.default_rng(seed)
        dirs.append(rng.standard_normal((max(4 * d, 2 * n), d)))
        u = np.vstack(dirs)
        norms = np.linalg.norm(u, axis=1)
        u = u[norms > 1e-12] / norms[norms > 1e-12, None]
        return cls(points, u, (u @ points.T).max(axis=1), exact=False)

    def boundary_distance(self, x: np.ndarray) -> float:
        return float((self.offsets - self.normals @ x).min())

    def contains(self, x: np.ndarray) -> bool:
        scale = max(1.0, float(np.abs(self.points).max()))
        if self.exact:
            return self.boundary_distance(x) >= -1e-9 * scale
        a = np.vstack([self.points.T / scale, np.ones(len(self.points))])
        b = np.concatenate([x / scale, [1.0]])
        _, residual = nnls(a, b)
        return residual <= HULL_FEASIBILITY_TOL

    def chebyshev_center(self) -> np.ndarray | None:
        """Center of the largest ball inscribed in the hull (facet case only)."""
        if not self.exact:
            return None
        d = self.points.shape[1]
        c = np.zeros(d + 1)
        c[-1] = -1.0
        a_ub = np.hstack([self.normals, np.ones((len(self.normals), 1))])
        res = linprog(c, A_ub=a_ub, b_ub=self.offsets, bounds=[(None, None)] * d + [(0, None)])
        return res.x[:d] if res.success else None


def _project_to_hull(points: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Euclidean projection of y onto the convex hull (QP over simplex weights)."""
    n = len(points)
    w0 = np.full(n, 1.0 / n)

    def objective(w):
        e = w @ points - y
        return float(e @ e)

    def gradient(w):
        return 2.0 * (points @ (w @ points - y))

    res = minimize(
        objective,
        w0,
        jac=gradient,
        bounds=[(0.0, 1.0)] * n,
        constraints=[{"type": "eq", "fun": lambda w: w.sum() - 1.0, "jac": lambda w: np.ones(n)}],
        method="SLSQP",
        options={"maxiter": 300, "ftol": 1e-14},
    )
    return res.x @ points


def _ball_radius(x: np.ndarray, points: np.ndarray, frame: _HullFrame) -> float:
    """Radius of the largest ball at x inside the hull avoiding all points."""
    gaps = np.linalg.norm(points - x, axis=1)
    return min(float(gaps.min()), frame.boundary_distance(x))


def _ascent_direction(x: np.ndarray, points: np.ndarray, frame: _HullFrame, r: float) -> np.ndarray | None:
    """Average push-away direction from all constraints active at radius r."""
    tol = max(1e-12, 1e-6 * r)
    pulls = []
    gaps = np.linalg.norm(points - x, axis=1)
    for i in np.flatnonzero(gaps <= r + tol):
        if gaps[i] > 1e-12:
            pulls.append((x - points[i]) / gaps[i])
    slacks = frame.offsets - frame.normals @ x
    for k in np.flatnonzero(slacks <= r + tol):
        pulls.append(-frame.normals[k])
    if not pulls:
        return None
    g = np.mean(pulls, axis=0)
    norm = np.linalg.norm(g)
    if norm < 1e-10:
        return None
    return g / norm


def _ascend(x0: np.ndarray, points: np.ndarray, frame: _HullFrame, iterations: int, scale: float):
    x = np.array(x0, dtype=float)
    r = _ball_radius(x, points, frame)
    step = 0.25 * scale
    for _ in range(iterations):
        g = _ascent_direction(x, points, frame, r)
        if g is None:
            break
        improved = False
        while step > 1e-12 * scale:
            y = x + step * g
            if not frame.contains(y):
                y = _project_to_hull(points, y)
            ry = _ball_radius(y, points, frame)
            if ry > r + 1e-15:
                x, r = y, ry
                step = min(step * 1.6, 0.25 * scale)
                improved = True
                break
            step *= 0.5
        if not improved:
            break
    return x, r


def _tunneling_1d(points: np.ndarray) -> TunnelingEstimate:
    xs = np.unique(points[:, 0])
    gaps = np.diff(xs)
    k = int(np.argmax(gaps))
    center = np.array([(xs[k] + xs[k + 1]) / 2.0])
    return TunnelingEstimate(float(gaps[k]), center, "multistart-maxmin", 0)


def tunneling(
    cloud: PointCloud,
    *,
    starts: int = 12,
    iterations: int = 150,
    seed: int = 0,
) -> TunnelingEstimate:
    """Estimate the tunneling constant by seeded multi-start projected ascent.

    Maximizes the radius of a ball kept inside the hull and away from every
    cloud point. Deterministic for a fixed seed; a lower-bound style estimate
    (exact hull facets are used whenever qhull can produce them).
    """
    if cloud.cardinality < 2:
        raise ValueError("tunneling undefined for fewer than two points")
    points = cloud.coords
    n, d = points.shape
    centroid = points.mean(axis=0)
    if _affine_rank(points) < d:
        return TunnelingEstimate(0.0, centroid, "multistart-maxmin", 0)
    if d == 1:
        return _tunneling_1d(points)

    frame = _HullFrame.build(points, seed)
    lo, hi = points.min(axis=0), points.max(axis=0)
    scale = float(np.linalg.norm(hi - lo))
    rng = np.random.default_rng(seed)

    candidates = [centroid]
    cheb = frame.chebyshev_center()
    if cheb is not None:
        candidates.append(cheb)
    # seeded uniform samples over the bounding box, kept only if inside the
    # hull; convex-combination draws fill the quota when rejection runs dry
    # (the hull occupies a vanishing volume fraction in high dimension)
    attempts = 0
    while len(candidates) < starts + 2 and attempts < 50 * max(starts, 1):
        x = lo + rng.random(d) * (hi - lo)
        attempts += 1
        if frame.contains(x):
            candidates.append(x)
    while len(candidates) < starts + 2:
        w = rng.exponential(size=n)
        candidates.append((w / w.sum()) @ points)

    best_x, best_r = centroid, -np.inf
    for x0 in candidates:
        x, r = _ascend(x0, points, frame, iterations, scale)
        if r > best_r:
            best_x, best_r = x, r
    return TunnelingEstimate(max(0.0, 2.0 * best_r), best_x, "multistart-maxmin", len(candidates))


def tunneling_oracle_2d(cloud: PointCloud, resolution: int = 2000) -> TunnelingEstimate:
    """Brute-force planar tunneling: best grid point over the hull's bounding box."""
    if cloud.dim != 2:
        raise ValueError("oracle is planar only")
    points = cloud.coords
    if _affine_rank(points) < 2:
        return TunnelingEstimate(0.0, points.mean(axis=0), "grid-oracle-2d", 0)
    hull = ConvexHull(points)
    normals, offsets = hull.equations[:, :2], -hull.equations[:, 2]

    lo, hi = points.min(axis=0), points.max(axis=0)
    xs = np.linspace(lo[0], hi[0], resolution)
    ys = np.linspace(lo[1], hi[1], resolution)
    best_r, best_xy = 0.0, points.mean(axis=0)
    for y in ys:
        grid = np.column_stack([xs, np.full_like(xs, y)])
        slack = (offsets[None, :] - grid @ normals.T).min(axis=1)
        inside = slack >= 0.0
        if not inside.any():
            continue
        radius = slack
        for p in points:
            np.minimum(radius, np.linalg.norm(grid - p, axis=1), out=radius)
        radius = np.where(inside, radius, -np.inf)
        k = int(np.argmax(radius))
        if radius[k] > best_r:
            best_r, best_xy = float(radius[k]), grid[k]
    return TunnelingEstimate(2.0 * best_r, best_xy, "grid-oracle-2d", resolution)
