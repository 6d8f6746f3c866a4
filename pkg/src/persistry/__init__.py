"""Persistent homology for small point clouds, applied to roster data.

The core layers build up from geometry to reporting:

- cloud: point clouds, distance matrices, sparsity, tunneling diameter
- filtration: Vietoris-Rips and Cech complexes up to dimension two
- persistence: boundary reduction, barcodes, Betti numbers
- roster: CSV parsing, stat normalization, trade edits
- analytics: team summaries, trade comparison, rank correlation
- render: deterministic SVG and text barcode drawings
- app / service / cli: shared pipeline, HTTP API, command line
"""

from .analytics import (
    CorrelationReport,
    MetricConfig,
    TeamSummary,
    TradeReport,
    compare,
    rank_correlation,
    summarize,
)
from .app import (
    AppConfig,
    barcode_payload,
    canonical_json,
    cloud_barcode,
    evaluate_trade,
    league_correlation,
    load_app_dataset,
    team_barcode,
    team_summary,
)
from .cloud import (
    DistanceMatrix,
    PointCloud,
    SparsityProfile,
    TunnelingEstimate,
    build_distance_matrix,
    degree_sparsity,
    hull_contains,
    minimum_spanning_edges,
    sparsity,
    tunneling,
    tunneling_oracle_2d,
)
from .filtration import (
    Filtration,
    Simplex,
    cech_filtration,
    min_enclosing_ball,
    rips_filtration,
)
from .persistence import (
    INF,
    Barcode,
    BoundaryMatrix,
    PersistenceInterval,
    barcode_to_dict,
    barcode_to_json,
    betti_at,
    betti_oracle,
    compute_intervals,
)
from .render import RenderOptions, render_barcode_svg, render_text
from .service import create_app
from .roster import (
    STAT_COLUMNS,
    Dataset,
    League,
    LeagueRow,
    ParseError,
    PlayerRecord,
    TeamRoster,
    TradeSpec,
    apply_trade,
    load_dataset,
    parse_league_csv,
    parse_roster_csv,
    roster_to_csv,
    team_slug,
    to_point_cloud,
)

__version__ = "0.1.0"

__all__ = [
    "AppConfig",
    "Barcode",
    "BoundaryMatrix",
    "CorrelationReport",
    "Dataset",
    "DistanceMatrix",
    "Filtration",
    "INF",
    "League",
    "LeagueRow",
    "MetricConfig",
    "ParseError",
    "PersistenceInterval",
    "PlayerRecord",
    "PointCloud",
    "RenderOptions",
    "STAT_COLUMNS",
    "Simplex",
    "SparsityProfile",
    "TeamRoster",
    "TeamSummary",
    "TradeReport",
    "TradeSpec",
    "TunnelingEstimate",
    "apply_trade",
    "barcode_payload",
    "barcode_to_dict",
    "barcode_to_json",
    "betti_at",
    "betti_oracle",
    "build_distance_matrix",
    "canonical_json",
    "cech_filtration",
    "cloud_barcode",
    "compare",
    "compute_intervals",
    "create_app",
    "degree_sparsity",
    "evaluate_trade",
    "hull_contains",
    "league_correlation",
    "load_app_dataset",
    "load_dataset",
    "min_enclosing_ball",
    "minimum_spanning_edges",
    "parse_league_csv",
    "parse_roster_csv",
    "rank_correlation",
    "render_barcode_svg",
    "render_text",
    "rips_filtration",
    "roster_to_csv",
    "sparsity",
    "summarize",
    "team_barcode",
    "team_slug",
    "team_summary",
    "to_point_cloud",
    "tunneling",
    "tunneling_oracle_2d",
    "__version__",
]
