"""Evaluate a hypothetical trade and explain the verdict.

A trade swaps one roster player for a player from another team (who keeps
their published stats). The before/after rosters are summarized and
compared: fewer or shorter loops and tighter merge scales read as a more
cohesive roster. Run from the repository root:

    python3 demos/trade_what_if.py
"""

from __future__ import annotations

from pathlib import Path

from persistry import AppConfig, evaluate_trade, load_app_dataset

DATA = Path(__file__).resolve().parent.parent / "data"


def main() -> None:
    config = AppConfig(dataset_root=DATA)
    dataset = load_app_dataset(config)

    team, out_player = "oilers", "Nail Yakupov"
    in_team, in_player = "sharks", "Joe Thornton"
    print(f"what if the {dataset.roster(team).team_name} sent out {out_player}"
          f" and got {in_player} from the {dataset.roster(in_team).team_name}?\n")

    report = evaluate_trade(dataset, team, out_player, in_team, in_player, config)
    rows = [
        ("top line", "top_line"),
        ("mean bar length", "mean_bar_length"),
        ("loop count", "h1_count"),
        ("loop total length", "h1_total_length"),
        ("sparsity", "sparsity"),
        ("tunneling diameter", "tunneling_diameter"),
    ]
    before, after = report.before.to_dict(), report.after.to_dict()
    before["sparsity"] = report.before.sparsity_profile.sparsity
    after["sparsity"] = report.after.sparsity_profile.sparsity
    before["tunneling_diameter"] = report.before.tunneling.diameter
    after["tunneling_diameter"] = report.after.tunneling.diameter

    print(f"{'metric':<20}{'before':>12}{'after':>12}{'delta':>12}")
    for label, key in rows:
        print(f"{label:<20}{before[key]:>12.3f}{after[key]:>12.3f}"
              f"{report.deltas[key]:>12.3f}")
    print(f"\nverdict: {report.verdict}")


if __name__ == "__main__":
    main()
