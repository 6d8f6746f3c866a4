"""Team-quality metrics from barcodes and clouds, trade comparison, and
the league-wide rank correlation between possession rank and standing.

The dimension-0 diagram is the primary signal (long bars = diverse roster),
dimension-1 the secondary one (long cycles = tunnels in the composition).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .cloud import PointCloud, SparsityProfile, TunnelingEstimate, degree_sparsity, tunneling
from .persistence import Barcode
from .roster import League


@dataclass(frozen=True)
class MetricConfig:
    """Knobs shared by every summary so that comparisons stay apples-to-apples."""

    noise_fraction: float = 0.01  # dim-1 bars shorter than this fraction of top_line are noise
    tunneling_starts: int = 12
    tunneling_iterations: int = 150
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.noise_fraction <= 0.5:
            raise ValueError("noise_fraction must be within [0, 0.5]")


@dataclass(frozen=True)
class TeamSummary:
    team: str
    top_line: float
    mean_bar_length: float
    h1_count: int
    h1_total_length: float
    sparsity_profile: SparsityProfile
    tunneling: TunnelingEstimate
    config: MetricConfig = field(default_factory=MetricConfig)

    def to_dict(self) -> dict:
        return {
            "team": self.team,
            "top_line": self.top_line,
            "mean_bar_length": self.mean_bar_length,
            "h1_count": self.h1_count,
            "h1_total_length": self.h1_total_length,
            "sparsity_profile": [float(v) for v in self.sparsity_profile.values],
            "tunneling": {
                "diameter": self.tunneling.diameter,
                "center": [float(c) for c in self.tunneling.center],
                "method": self.tunneling.method,
                "starts_used": self.tunneling.starts_used,
            },
            "noise_fraction": self.config.noise_fraction,
        }


DELTA_FIELDS = ("top_line", "mean_bar_length", "h1_count", "h1_total_length", "sparsity", "tunneling_diameter")


@dataclass(frozen=True)
class TradeReport:
    before: TeamSummary
    after: TeamSummary
    deltas: dict[str, float]
    verdict: str  # improved | worsened | neutral

    def to_dict(self) -> dict:
        return {
            "before": self.before.to_dict(),
            "after": self.after.to_dict(),
            "deltas": dict(self.deltas),
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class CorrelationReport:
    rho: float
    n: int
    pairs: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {"rho": self.rho, "n": self.n, "pairs": [list(p) for p in self.pairs]}


def summarize(
    team: str,
    barcode: Barcode,
    cloud: PointCloud,
    config: MetricConfig = MetricConfig(),
) -> TeamSummary:
    """Derive the team metrics from its barcode and cloud.

    The essential dim-0 bar is excluded; dim-1 bars shorter than
    noise_fraction * top_line are ignored, as are essential dim-1 classes
    (none occur once the filtration reaches its contractible endpoint).
    """
    finite = barcode.finite_deaths(0)
    if not finite:
        raise ValueError("summary needs at least one finite dimension-0 bar")
    top_line = max(finite)
    mean_bar = sum(finite) / len(finite)
    floor = config.noise_fraction * top_line
    h1 = [
        iv
        for iv in barcode.in_dim(1)
        if not iv.is_infinite and iv.length >= floor and iv.length > 0
    ]
    return TeamSummary(
        team=team,
        top_line=top_line,
        mean_bar_length=mean_bar,
        h1_count=len(h1),
        h1_total_length=sum(iv.length for iv in h1),
        sparsity_profile=degree_sparsity(cloud),
        tunneling=tunneling(
            cloud,
            starts=config.tunneling_starts,
            iterations=config.tunneling_iterations,
            seed=config.seed,
        ),
        config=config,
    )


def compare(before: TeamSummary, after: TeamSummary) -> TradeReport:
    """Before/after report; dim-1 relief dominates, then dim-0 spread.

    Verdict policy: lexicographic on (h1_count, h1_total_length) with fewer
    or shorter cycles counting as improvement; when dim-1 is unchanged, a
    larger mean dim-0 bar length wins.
    """
    if before.team != after.team:
        raise ValueError(f"cannot compare {before.team!r} with {after.team!r}")
    if before.config != after.config:
        raise ValueError("cannot compare summaries computed under different configs")
    deltas = {
        "top_line": after.top_line - before.top_line,
        "mean_bar_length": after.mean_bar_length - before.mean_bar_length,
        "h1_count": float(after.h1_count - before.h1_count),
        "h1_total_length": after.h1_total_length - before.h1_total_length,
        "sparsity": after.sparsity_profile.sparsity - before.sparsity_profile.sparsity,
        "tunneling_diameter": after.tunneling.diameter - before.tunneling.diameter,
    }
    key_before = (before.h1_count, before.h1_total_length)
    key_after = (after.h1_count, after.h1_total_length)
    if key_after < key_before:
        verdict = "improved"
    elif key_after > key_before:
        verdict = "worsened"
    elif after.mean_bar_length > before.mean_bar_length:
        verdict = "improved"
    elif after.mean_bar_length < before.mean_bar_length:
        verdict = "worsened"
    else:
        verdict = "neutral"
    return TradeReport(before, after, deltas, verdict)


def rank_correlation(league: League) -> CorrelationReport:
    """Spearman correlation between possession rank and final standing.

    Both columns are tie-free permutations, so the closed form over squared
    rank differences applies exactly.
    """
    pairs = tuple(
        (r.corsi_rank, r.standing) for r in sorted(league.rows, key=lambda r: r.corsi_rank)
    )
    n = len(pairs)
    if n < 2:
        raise ValueError("correlation needs at least two teams")
    d2 = sum((a - b) ** 2 for a, b in pairs)
    rho = 1.0 - 6.0 * d2 / (n * (n * n - 1))
    if not -1.0 <= rho <= 1.0:  # permutation inputs guarantee this
        raise AssertionError(f"rho out of range: {rho}")
    return CorrelationReport(rho, n, pairs)
