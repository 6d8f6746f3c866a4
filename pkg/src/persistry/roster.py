"""Player-stat CSV ingestion, league standings, and hypothetical trades.

Stat files carry one season of even-strength player statistics, one player
per row, in the fixed 12-column order below. Values are ingested verbatim
(including 0.01 placeholders); no eligibility filtering happens here, input
files are assumed pre-filtered.
"""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass
from pathlib import Path

from .cloud import PointCloud

STAT_COLUMNS = ("G", "A", "SP", "P1", "S", "CF", "PSR", "PenDr", "HitF", "HitA", "Tk", "Gv")
ROSTER_HEADER = ("Name",) + STAT_COLUMNS
LEAGUE_HEADER = ("Team", "Rank", "CorsiFor", "Points", "Standing")


class ParseError(ValueError):
    """CSV content that cannot be ingested; message names the row and column."""


@dataclass(frozen=True)
class PlayerRecord:
    name: str
    stats: tuple[float, ...]  # 12 values in STAT_COLUMNS order

    def __post_init__(self):
        if len(self.stats) != len(STAT_COLUMNS):
            raise ValueError(f"expected {len(STAT_COLUMNS)} stats, got {len(self.stats)}")
        for col, v in zip(STAT_COLUMNS, self.stats):
            if not math.isfinite(v) or v < 0:
                raise ValueError(f"stat {col} must be a finite non-negative number")

    def stat(self, column: str) -> float:
        return self.stats[STAT_COLUMNS.index(column)]


@dataclass(frozen=True)
class TeamRoster:
    team_name: str
    players: tuple[PlayerRecord, ...]

    def __post_init__(self):
        if len(self.players) < 2:
            raise ValueError("a roster needs at least two players")
        names = [p.name for p in self.players]
        if len(set(names)) != len(names):
            raise ValueError("player names must be unique within a roster")

    def player(self, name: str) -> PlayerRecord:
        for p in self.players:
            if p.name == name:
                return p
        raise KeyError(f"no player named {name!r} on {self.team_name}")

    def names(self) -> list[str]:
        return [p.name for p in self.players]


@dataclass(frozen=True)
class LeagueRow:
    team: str
    corsi_rank: int
    corsi_for: int
    points: int
    standing: int


@dataclass(frozen=True)
class League:
    rows: tuple[LeagueRow, ...]

    def __post_init__(self):
        n = len(self.rows)
        expected = set(range(1, n + 1))
        if {r.corsi_rank for r in self.rows} != expected:
            raise ValueError("corsi ranks must be a permutation of 1..N")
        if {r.standing for r in self.rows} != expected:
            raise ValueError("standings must be a permutation of 1..N")
        by_rank = sorted(self.rows, key=lambda r: r.corsi_rank)
        for a, b in zip(by_rank, by_rank[1:]):
            if a.corsi_for < b.corsi_for:
                raise ValueError("corsi-for must be nonincreasing in corsi rank")


@dataclass(frozen=True)
class TradeSpec:
    team: str
    outgoing_player: str
    incoming: PlayerRecord
    incoming_team: str = ""


def _decode(content: bytes | str) -> str:
    if isinstance(content, bytes):
        return content.decode("utf-8")
    return content


def parse_roster_csv(content: bytes | str, team_name: str = "team") -> TeamRoster:
    """Parse one team's stat CSV into a roster; errors name the row and column."""
    text = _decode(content)
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows:
        raise ParseError("empty roster file")
    header = tuple(h.strip() for h in rows[0])
    if header != ROSTER_HEADER:
        raise ParseError(
            f"bad roster header: expected {','.join(ROSTER_HEADER)}, got {','.join(header)}"
        )
    players = []
    seen = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(ROSTER_HEADER):
            raise ParseError(f"row {lineno}: expected {len(ROSTER_HEADER)} fields, got {len(row)}")
        name = row[0].strip()
        if not name:
            raise ParseError(f"row {lineno}: empty Name")
        if name in seen:
            raise ParseError(f"row {lineno}: duplicate name {name!r}")
        seen.add(name)
        stats = []
        for col, cell in zip(STAT_COLUMNS, row[1:]):
            try:
                stats.append(float(cell))
            except ValueError:
                raise ParseError(f"row {lineno}, column {col}: non-numeric value {cell!r}") from None
        try:
            players.append(PlayerRecord(name, tuple(stats)))
        except ValueError as exc:
            raise ParseError(f"row {lineno}: {exc}") from None
    if len(players) < 2:
        raise ParseError("a roster needs at least two players")
    return TeamRoster(team_name, tuple(players))


def roster_to_csv(roster: TeamRoster) -> str:
    """Inverse of parse_roster_csv; numbers rendered as their shortest decimal text."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(ROSTER_HEADER)
    for p in roster.players:
        writer.writerow([p.name] + [format(v, "g") for v in p.stats])
    return out.getvalue()


def parse_league_csv(content: bytes | str) -> League:
    """Parse the league standings table and validate its rank permutations."""
    text = _decode(content)
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if not rows:
        raise ParseError("empty league file")
    header = tuple(h.strip() for h in rows[0])
    if header != LEAGUE_HEADER:
        raise ParseError(
            f"bad league header: expected {','.join(LEAGUE_HEADER)}, got {','.join(header)}"
        )
    parsed = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(LEAGUE_HEADER):
            raise ParseError(f"row {lineno}: expected {len(LEAGUE_HEADER)} fields, got {len(row)}")
        team = row[0].strip()
        values = []
        for col, cell in zip(LEAGUE_HEADER[1:], row[1:]):
            try:
                values.append(int(cell))
            except ValueError:
                raise ParseError(f"row {lineno}, column {col}: non-integer value {cell!r}") from None
        parsed.append(LeagueRow(team, *values))
    try:
        return League(tuple(parsed))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def to_point_cloud(
    roster: TeamRoster,
    selected_stats: tuple[str, ...] | None = None,
    scaling: tuple[float, ...] | None = None,
) -> PointCloud:
    """Roster as a point cloud: one point per player, one axis per selected stat.

    Raw values by default; a per-column scaling vector is the only knob.
    """
    cols = tuple(selected_stats) if selected_stats is not None else STAT_COLUMNS
    if not cols:
        raise ValueError("select at least one stat column")
    unknown = [c for c in cols if c not in STAT_COLUMNS]
    if unknown:
        raise ValueError(f"unknown stat columns: {', '.join(unknown)}")
    if scaling is not None and len(scaling) != len(cols):
        raise ValueError("scaling must match the selected columns")
    idx = [STAT_COLUMNS.index(c) for c in cols]
    factors = tuple(scaling) if scaling is not None else (1.0,) * len(cols)
    return PointCloud(
        (p.name, [p.stats[i] * f for i, f in zip(idx, factors)]) for p in roster.players
    )


def apply_trade(roster: TeamRoster, trade: TradeSpec) -> TeamRoster:
    """New roster with the outgoing row removed and the incoming row appended."""
    if trade.team != roster.team_name:
        raise ValueError(f"trade names team {trade.team!r}, roster is {roster.team_name!r}")
    names = roster.names()
    if trade.outgoing_player not in names:
        raise ValueError(f"no player named {trade.outgoing_player!r} on {roster.team_name}")
    if trade.incoming.name in names and trade.incoming.name != trade.outgoing_player:
        raise ValueError(f"{trade.incoming.name!r} is already on {roster.team_name}")
    kept = tuple(p for p in roster.players if p.name != trade.outgoing_player)
    return TeamRoster(roster.team_name, kept + (trade.incoming,))


# -- dataset directory layout: <root>/<season>/<team-slug>.csv + league.csv --

LEAGUE_FILENAME = "league.csv"


def team_slug(name: str) -> str:
    return re.sub(r"[^a-z0-9]+", "-", name.lower()).strip("-")


def display_name(slug: str) -> str:
    return slug.replace("-", " ").title()


@dataclass(frozen=True)
class Dataset:
    """All rosters of one season plus the league table, keyed by team slug."""

    root: Path
    season: str
    teams: dict[str, TeamRoster]
    league: League | None

    def roster(self, slug: str) -> TeamRoster:
        if slug not in self.teams:
            raise KeyError(f"unknown team {slug!r}")
        return self.teams[slug]


def load_dataset(root: Path | str, season: str) -> Dataset:
    """Load and validate every team CSV under <root>/<season>/, failing fast."""
    root = Path(root)
    season_dir = root / season
    if not season_dir.is_dir():
        raise FileNotFoundError(f"no season directory {season_dir}")
    teams = {}
    league = None
    for path in sorted(season_dir.glob("*.csv")):
        if path.name == LEAGUE_FILENAME:
            league = parse_league_csv(path.read_bytes())
            continue
        slug = path.stem
        try:
            teams[slug] = parse_roster_csv(path.read_bytes(), team_name=display_name(slug))
        except ParseError as exc:
            raise ParseError(f"{path.name}: {exc}") from None
    if not teams:
        raise FileNotFoundError(f"no team files in {season_dir}")
    return Dataset(root, season, teams, league)
