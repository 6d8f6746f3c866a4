"""Shared application pipeline: dataset + config -> clouds, barcodes, reports.

Both the CLI and the HTTP service go through these helpers and through one
canonical JSON encoder, so the two surfaces return byte-identical documents
for the same logical query.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .analytics import MetricConfig, TeamSummary, TradeReport, compare, rank_correlation, summarize
from .cloud import PointCloud, build_distance_matrix
from .filtration import rips_filtration
from .persistence import Barcode, barcode_to_dict, compute_intervals
from .roster import (
    STAT_COLUMNS,
    Dataset,
    TeamRoster,
    TradeSpec,
    apply_trade,
    load_dataset,
    to_point_cloud,
)


@dataclass(frozen=True)
class AppConfig:
    dataset_root: Path
    season: str = "2013-2014"
    selected_stats: tuple[str, ...] = STAT_COLUMNS
    metrics: MetricConfig = field(default_factory=MetricConfig)
    listen: str = "127.0.0.1:8765"

    def __post_init__(self):
        object.__setattr__(self, "dataset_root", Path(self.dataset_root))
        if not self.dataset_root.exists():
            raise FileNotFoundError(f"dataset root {self.dataset_root} does not exist")


def canonical_json(data) -> str:
    """The one JSON encoding used by every output surface."""
    return json.dumps(data, indent=2, allow_nan=False) + "\n"


def load_app_dataset(config: AppConfig) -> Dataset:
    return load_dataset(config.dataset_root, config.season)


def roster_cloud(roster: TeamRoster, config: AppConfig) -> PointCloud:
    return to_point_cloud(roster, config.selected_stats)


def cloud_barcode(cloud: PointCloud) -> Barcode:
    """Rips barcode at the default horizon (complex runs to contractibility)."""
    return compute_intervals(rips_filtration(build_distance_matrix(cloud)), max_dim=1)


def team_summary(dataset: Dataset, slug: str, config: AppConfig) -> TeamSummary:
    roster = dataset.roster(slug)
    cloud = roster_cloud(roster, config)
    return summarize(roster.team_name, cloud_barcode(cloud), cloud, config.metrics)


def team_barcode(dataset: Dataset, slug: str, config: AppConfig) -> Barcode:
    return cloud_barcode(roster_cloud(dataset.roster(slug), config))


def barcode_payload(barcode: Barcode, dim: int | None = None) -> dict:
    doc = barcode_to_dict(barcode)
    if dim is None:
        return doc
    return {"dim": dim, "intervals": doc[f"dim{dim}"]}


def evaluate_trade(
    dataset: Dataset,
    team: str,
    outgoing: str,
    incoming_team: str,
    incoming_player: str,
    config: AppConfig,
) -> TradeReport:
    """What-if report for swapping one roster player for another team's player.

    The incoming player keeps the published stats from their own team; the
    stored rosters are never mutated.
    """
    roster = dataset.roster(team)
    source = dataset.roster(incoming_team)
    incoming = source.player(incoming_player)  # KeyError for unknown names
    roster.player(outgoing)
    trade = TradeSpec(
        team=roster.team_name,
        outgoing_player=outgoing,
        incoming=incoming,
        incoming_team=source.team_name,
    )
    traded = apply_trade(roster, trade)
    before_cloud = roster_cloud(roster, config)
    after_cloud = roster_cloud(traded, config)
    before = summarize(roster.team_name, cloud_barcode(before_cloud), before_cloud, config.metrics)
    after = summarize(roster.team_name, cloud_barcode(after_cloud), after_cloud, config.metrics)
    return compare(before, after)


def league_correlation(dataset: Dataset):
    if dataset.league is None:
        raise FileNotFoundError("dataset has no league.csv")
    return rank_correlation(dataset.league)
