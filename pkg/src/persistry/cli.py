"""Command line interface.

Exit codes: 0 on success, 2 for bad input (missing dataset, unknown team,
malformed rosters), 1 for anything unexpected.
"""

from __future__ import annotations

import sys

import click

from .analytics import MetricConfig
from .app import (
    AppConfig,
    barcode_payload,
    canonical_json,
    evaluate_trade,
    league_correlation,
    load_app_dataset,
    team_barcode,
    team_summary,
)
from .render import RenderOptions, render_barcode_svg, render_text
from .roster import STAT_COLUMNS, ParseError


class _State:
    def __init__(self, config: AppConfig):
        self.config = config
        self._dataset = None

    @property
    def dataset(self):
        if self._dataset is None:
            self._dataset = load_app_dataset(self.config)
        return self._dataset


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _parse_stats(raw: str | None) -> tuple[str, ...]:
    if raw is None:
        return STAT_COLUMNS
    names = tuple(part.strip() for part in raw.split(",") if part.strip())
    if not names:
        _fail("--stats must name at least one column")
    unknown = [n for n in names if n not in STAT_COLUMNS]
    if unknown:
        _fail(f"unknown stat columns: {', '.join(unknown)}")
    return names


@click.group()
@click.option(
    "--dataset",
    "dataset_root",
    envvar="PERSISTRY_DATASET",
    required=True,
    type=click.Path(),
    help="Dataset root directory (env: PERSISTRY_DATASET).",
)
@click.option("--season", default="2013-2014", show_default=True, help="Season folder to load.")
@click.option("--stats", default=None, help="Comma separated stat columns (default: all twelve).")
@click.option(
    "--noise-fraction",
    default=0.01,
    show_default=True,
    type=float,
    help="Fraction of the top line below which loops are ignored.",
)
@click.option("--seed", default=0, show_default=True, type=int, help="Estimator seed.")
@click.pass_context
def main(ctx, dataset_root, season, stats, noise_fraction, seed):
    """Persistent homology analytics for roster data."""
    try:
        metrics = MetricConfig(noise_fraction=noise_fraction, seed=seed)
        config = AppConfig(
            dataset_root=dataset_root,
            season=season,
            selected_stats=_parse_stats(stats),
            metrics=metrics,
        )
    except (ValueError, FileNotFoundError) as exc:
        _fail(str(exc))
    ctx.obj = _State(config)


def _load(state: _State):
    try:
        return state.dataset
    except (FileNotFoundError, ParseError, ValueError) as exc:
        _fail(str(exc))


def _require_team(dataset, slug: str) -> None:
    if slug not in dataset.teams:
        known = ", ".join(sorted(dataset.teams)) or "none"
        _fail(f"unknown team {slug!r} (available: {known})")


@main.command()
@click.option("--team", required=True, help="Team slug, e.g. sharks.")
@click.option("--dim", default=0, show_default=True, type=click.IntRange(0, 1))
@click.option(
    "--format",
    "fmt",
    default="json",
    show_default=True,
    type=click.Choice(["json", "svg", "text"]),
)
@click.pass_obj
def barcode(state, team, dim, fmt):
    """Print a team's persistence barcode."""
    dataset = _load(state)
    _require_team(dataset, team)
    code = team_barcode(dataset, team, state.config)
    if fmt == "json":
        click.echo(canonical_json(barcode_payload(code, dim)), nl=False)
    elif fmt == "svg":
        click.echo(render_barcode_svg(code, RenderOptions(dim=dim)), nl=False)
    else:
        click.echo(render_text(code, RenderOptions(dim=dim)), nl=False)


@main.command()
@click.option("--team", required=True, help="Team slug, e.g. sharks.")
@click.pass_obj
def summary(state, team):
    """Print shape metrics for one team."""
    dataset = _load(state)
    _require_team(dataset, team)
    click.echo(canonical_json(team_summary(dataset, team, state.config).to_dict()), nl=False)


@main.command()
@click.option("--team", required=True, help="Team making the trade.")
@click.option("--out-player", required=True, help="Player leaving the roster.")
@click.option("--in-team", required=True, help="Team the incoming player comes from.")
@click.option("--in-player", required=True, help="Player joining the roster.")
@click.pass_obj
def trade(state, team, out_player, in_team, in_player):
    """Evaluate a hypothetical one for one trade."""
    dataset = _load(state)
    _require_team(dataset, team)
    _require_team(dataset, in_team)
    try:
        report = evaluate_trade(dataset, team, out_player, in_team, in_player, state.config)
    except (KeyError, ValueError) as exc:
        _fail(str(exc.args[0]))
    click.echo(canonical_json(report.to_dict()), nl=False)


@main.command()
@click.pass_obj
def correlate(state):
    """Rank correlation between league shot-share rank and final standing."""
    dataset = _load(state)
    try:
        report = league_correlation(dataset)
    except FileNotFoundError as exc:
        _fail(str(exc))
    click.echo(canonical_json(report.to_dict()), nl=False)


@main.command()
@click.option("--listen", default="127.0.0.1:8765", show_default=True, help="host:port to bind.")
@click.pass_obj
def serve(state, listen):
    """Run the HTTP JSON service."""
    import uvicorn

    from .service import create_app

    dataset = _load(state)
    host, sep, port = listen.rpartition(":")
    if not sep or not port.isdigit():
        _fail("--listen must look like host:port")
    app = create_app(dataset, state.config)
    uvicorn.run(app, host=host, port=int(port), log_level="warning")


if __name__ == "__main__":
    main()
