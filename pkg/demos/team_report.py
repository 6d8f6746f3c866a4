"""Summarize one team's roster geometry and save its barcode as SVG.

Each player is a point in 12-dimensional stat space. The summary reports
how spread out the roster is (sparsity, merge profile), whether the stat
cloud encircles any holes (dimension-1 bars above the noise floor), and
the tunneling diameter (the widest ball that fits between players inside
their hull). Run from the repository root:

    python3 demos/team_report.py [team-slug]
"""

from __future__ import annotations

import sys
from pathlib import Path

from persistry import (
    AppConfig,
    RenderOptions,
    load_app_dataset,
    render_barcode_svg,
    team_barcode,
    team_summary,
)

DATA = Path(__file__).resolve().parent.parent / "data"


def main() -> None:
    slug = sys.argv[1] if len(sys.argv) > 1 else "sharks"
    config = AppConfig(dataset_root=DATA)
    dataset = load_app_dataset(config)
    if slug not in dataset.teams:
        raise SystemExit(f"unknown team {slug!r}; have: {', '.join(sorted(dataset.teams))}")

    summary = team_summary(dataset, slug, config)
    print(f"team: {summary.team}")
    print(f"closest pair distance: {summary.sparsity_profile.sparsity:.3f}")
    print(f"last merge scale:      {summary.top_line:.3f}")
    print(f"mean bar length:       {summary.mean_bar_length:.3f}")
    floor = summary.config.noise_fraction * summary.top_line
    print(f"loops above noise floor ({floor:.3f}): {summary.h1_count}"
          f" (total length {summary.h1_total_length:.3f})")
    print(f"tunneling diameter:    {summary.tunneling.diameter:.3f}"
          f" ({summary.tunneling.method})")

    barcode = team_barcode(dataset, slug, config)
    out = Path(f"{slug}-barcode.svg")
    out.write_text(render_barcode_svg(barcode, RenderOptions()))
    print(f"\nwrote {out} ({len(barcode.in_dim(0))} dim-0 bars,"
          f" {len(barcode.in_dim(1))} dim-1 bars)")


if __name__ == "__main__":
    main()
