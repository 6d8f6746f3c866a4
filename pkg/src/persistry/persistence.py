"""Persistence intervals by boundary-matrix column reduction over GF(2).

The standard reduction: walk columns in filtration order, repeatedly adding
earlier columns that share the same lowest row index until lows are unique.
A pair (i, j) becomes the interval [value(i), value(j)); unpaired positive
simplices live forever. Zero-length intervals are dropped.

An independent check, betti_oracle, recomputes Betti numbers at a threshold
from ranks of the boundary maps via plain Gaussian elimination.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .filtration import Filtration

INF = math.inf


@dataclass(frozen=True)
class PersistenceInterval:
    dim: int
    birth: float
    death: float  # math.inf for essential classes

    def __post_init__(self):
        if self.dim not in (0, 1):
            raise ValueError("only dimensions 0 and 1 are tracked")
        if self.death < self.birth:
            raise ValueError("interval death before birth")

    @property
    def length(self) -> float:
        return self.death - self.birth

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.death)


@dataclass(frozen=True)
class Barcode:
    """Persistence intervals grouped by dimension for one filtration."""

    intervals: tuple[PersistenceInterval, ...]
    cloud_cardinality: int

    def in_dim(self, dim: int) -> list[PersistenceInterval]:
        return [iv for iv in self.intervals if iv.dim == dim]

    def finite_deaths(self, dim: int) -> list[float]:
        return sorted(iv.death for iv in self.in_dim(dim) if not iv.is_infinite)


class BoundaryMatrix:
    """Sparse GF(2) boundary columns in filtration order."""

    def __init__(self, filtration: Filtration):
        index_of: dict[tuple[int, ...], int] = {}
        columns: list[set[int]] = []
        for j, simplex in enumerate(filtration.simplices):
            rows = set()
            for face in simplex.faces():
                i = index_of.get(face)
                if i is None or i > j:
                    raise ValueError("filtration order violated")
                rows.add(i)
            index_of[simplex.vertices] = j
            columns.append(rows)
        self.columns = columns
        self.simplices = filtration.simplices

    def reduce(self) -> dict[int, int]:
        """Run the reduction; returns {death_column: birth_column} pairs."""
        low_of: dict[int, int] = {}  # lowest row index -> owning column
        pairs: dict[int, int] = {}
        for j, col in enumerate(self.columns):
            while col:
                low = max(col)
                other = low_of.get(low)
                if other is None:
                    low_of[low] = j
                    pairs[j] = low
                    break
                col ^= self.columns[other]
            # an emptied column is a positive simplex (creator)
        return pairs


def compute_intervals(filtration: Filtration, max_dim: int = 1) -> Barcode:
    """Barcode of the filtration up to max_dim, zero-length intervals discarded."""
    matrix = BoundaryMatrix(filtration)
    pairs = matrix.reduce()
    simplices = filtration.simplices
    paired_births = set(pairs.values())
    paired_deaths = set(pairs)

    intervals = []
    for death_col, birth_col in pairs.items():
        dim = simplices[birth_col].dim
        if dim > max_dim:
            continue
        birth, death = simplices[birth_col].value, simplices[death_col].value
        if death > birth:
            intervals.append(PersistenceInterval(dim, birth, death))
    for j, simplex in enumerate(simplices):
        if j in paired_births or j in paired_deaths:
            continue
        if simplex.dim <= max_dim:  # positive and never killed
            intervals.append(PersistenceInterval(simplex.dim, simplex.value, INF))

    ordered = tuple(sorted(intervals, key=lambda iv: (iv.dim, iv.birth, iv.death)))
    return Barcode(ordered, filtration.vertex_count)


def betti_at(barcode: Barcode, t: float, dim: int) -> int:
    """Number of classes of the given dimension alive at time t (birth <= t < death)."""
    if t < 0:
        raise ValueError("thresholds are non-negative")
    return sum(1 for iv in barcode.in_dim(dim) if iv.birth <= t < iv.death)


def _gf2_rank(rows: list[int]) -> int:
    """Rank of a GF(2) matrix given as row bitmasks."""
    rank = 0
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            low = p & -p
            if row & low:
                row ^= p
        if row:
            pivots.append(row)
            rank += 1
    return rank


def betti_oracle(filtration: Filtration, t: float, dim: int) -> int:
    """Betti number at threshold t from boundary ranks, independent of reduction.

    beta_k = dim C_k - rank d_k - rank d_{k+1} on the sub-complex at value <= t.
    """
    if dim not in (0, 1):
        raise ValueError("oracle covers dimensions 0 and 1")
    verts, edges, tris = [], [], []
    for s in filtration.simplices:
        if s.value <= t:
            (verts, edges, tris)[s.dim].append(s.vertices)
    vidx = {v: k for k, v in enumerate(verts)}
    eidx = {e: k for k, e in enumerate(edges)}
    d1 = [(1 << vidx[(i,)]) | (1 << vidx[(j,)]) for i, j in edges]
    rank1 = _gf2_rank(d1)
    if dim == 0:
        return len(verts) - rank1
    d2 = [
        (1 << eidx[(i, j)]) | (1 << eidx[(i, k)]) | (1 << eidx[(j, k)])
        for i, j, k in tris
    ]
    rank2 = _gf2_rank(d2)
    return len(edges) - rank1 - rank2


def barcode_to_json(barcode: Barcode) -> str:
    """Serialize as {"dim0": [[birth, death|null], ...], "dim1": [...]}."""
    return json.dumps(barcode_to_dict(barcode), indent=2) + "\n"


def barcode_to_dict(barcode: Barcode) -> dict:
    def encode(dim: int):
        ivs = sorted(
            barcode.in_dim(dim),
            key=lambda iv: (iv.birth, INF if iv.is_infinite else iv.death),
        )
        return [[iv.birth, None if iv.is_infinite else iv.death] for iv in ivs]

    return {"dim0": encode(0), "dim1": encode(1)}
