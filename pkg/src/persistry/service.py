"""HTTP JSON service over a loaded dataset.

Read-only: every trade evaluation works on roster copies, the dataset is
immutable after startup, and identical requests yield identical bytes.
"""

from __future__ import annotations

import json

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from .app import (
    AppConfig,
    barcode_payload,
    canonical_json,
    evaluate_trade,
    league_correlation,
    team_barcode,
    team_summary,
)
from .roster import STAT_COLUMNS, Dataset


def _json_response(data, status_code: int = 200) -> Response:
    return Response(
        content=canonical_json(data), status_code=status_code, media_type="application/json"
    )


def _error(status_code: int, message: str) -> Response:
    return _json_response({"error": message}, status_code)


def create_app(dataset: Dataset, config: AppConfig) -> FastAPI:
    app = FastAPI(title="persistry", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/teams")
    def list_teams() -> Response:
        teams = [
            {
                "slug": slug,
                "name": roster.team_name,
                "player_count": len(roster.players),
            }
            for slug, roster in sorted(dataset.teams.items())
        ]
        return _json_response(teams)

    @app.get("/api/teams/{slug}/summary")
    def get_summary(slug: str) -> Response:
        if slug not in dataset.teams:
            return _error(404, f"unknown team {slug!r}")
        return _json_response(team_summary(dataset, slug, config).to_dict())

    @app.get("/api/teams/{slug}/barcode")
    def get_barcode(slug: str, dim: str | None = None) -> Response:
        if slug not in dataset.teams:
            return _error(404, f"unknown team {slug!r}")
        if dim is not None and dim not in ("0", "1"):
            return _error(400, "dim must be 0 or 1")
        barcode = team_barcode(dataset, slug, config)
        return _json_response(barcode_payload(barcode, None if dim is None else int(dim)))

    @app.get("/api/teams/{slug}/players")
    def get_players(slug: str) -> Response:
        if slug not in dataset.teams:
            return _error(404, f"unknown team {slug!r}")
        roster = dataset.teams[slug]
        players = [
            {"name": p.name, "stats": dict(zip(STAT_COLUMNS, p.stats))}
            for p in roster.players
        ]
        return _json_response(players)

    @app.post("/api/trades/evaluate")
    async def post_trade(request: Request) -> Response:
        try:
            body = json.loads(await request.body())
        except json.JSONDecodeError:
            return _error(400, "request body is not valid JSON")
        if not isinstance(body, dict):
            return _error(400, "request body must be a JSON object")
        required = ("team", "outgoing", "incoming_team", "incoming_player")
        missing = [k for k in required if not isinstance(body.get(k), str) or not body[k]]
        if missing:
            return _error(400, f"missing or invalid fields: {', '.join(missing)}")
        try:
            report = evaluate_trade(
                dataset,
                body["team"],
                body["outgoing"],
                body["incoming_team"],
                body["incoming_player"],
                config,
            )
        except KeyError as exc:
            return _error(404, str(exc.args[0]))
        except ValueError as exc:
            return _error(400, str(exc))
        return _json_response(report.to_dict())

    @app.get("/api/league/correlation")
    def get_correlation() -> Response:
        try:
            return _json_response(league_correlation(dataset).to_dict())
        except FileNotFoundError as exc:
            return _error(404, str(exc))

    return app
