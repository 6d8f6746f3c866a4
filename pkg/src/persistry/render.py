"""Deterministic barcode views: SVG documents and terminal text.

Output is a pure function of the barcode and options, so golden-file and
byte-identity tests are reliable. Bars span the full image width scaled to
[0, axis_max]; essential classes run to the right edge with an arrow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .persistence import Barcode, PersistenceInterval

_SORTS = ("by_death_asc", "by_birth_asc")


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 640
    height_px: int = 320
    axis_max: float | None = None  # None = auto (snug over the largest finite death)
    dim: int = 0
    sort: str = "by_death_asc"
    infinite_marker: bool = True

    def __post_init__(self):
        if self.width_px <= 0 or self.height_px <= 0:
            raise ValueError("image dimensions must be positive")
        if self.dim not in (0, 1):
            raise ValueError("dim must be 0 or 1")
        if self.sort not in _SORTS:
            raise ValueError(f"sort must be one of {_SORTS}")
        if self.axis_max is not None and self.axis_max <= 0:
            raise ValueError("axis_max must be positive")


def _ordered(barcode: Barcode, dim: int, sort: str) -> list[PersistenceInterval]:
    ivs = barcode.in_dim(dim)
    if sort == "by_death_asc":
        return sorted(ivs, key=lambda iv: (iv.death, iv.birth))
    return sorted(ivs, key=lambda iv: (iv.birth, iv.death))


def _auto_axis_max(barcode: Barcode, intervals: list[PersistenceInterval]) -> float:
    finite = [iv.death for iv in barcode.intervals if not iv.is_infinite]
    births = [iv.birth for iv in intervals]
    top = max(finite + births + [1.0])
    return 1.05 * top if top > 0 else 1.0


def _fmt(x: float) -> str:
    return format(x, ".2f")


def render_barcode_svg(barcode: Barcode, options: RenderOptions = RenderOptions()) -> str:
    """One horizontal bar per interval of the selected dimension, as SVG text."""
    intervals = _ordered(barcode, options.dim, options.sort)
    axis_max = options.axis_max if options.axis_max is not None else _auto_axis_max(barcode, intervals)
    if intervals:
        largest_finite = max((iv.death for iv in intervals if not iv.is_infinite), default=0.0)
        if axis_max < largest_finite:
            raise ValueError("axis_max must cover the largest finite death")
    w, h = options.width_px, options.height_px
    axis_h = 22
    plot_h = h - axis_h

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
    ]
    rows = max(len(intervals), 1)
    row_h = plot_h / rows
    bar_h = max(1.0, row_h * 0.6)
    for k, iv in enumerate(intervals):
        x0 = iv.birth / axis_max * w
        x1 = w if iv.is_infinite else iv.death / axis_max * w
        y = k * row_h + (row_h - bar_h) / 2.0
        parts.append(
            f'<rect x="{_fmt(x0)}" y="{_fmt(y)}" width="{_fmt(x1 - x0)}" '
            f'height="{_fmt(bar_h)}" fill="#2b6cb0"/>'
        )
        if iv.is_infinite and options.infinite_marker:
            ym = y + bar_h / 2.0
            parts.append(
                f'<path d="M {_fmt(w - 8)} {_fmt(ym - 5)} L {_fmt(w)} {_fmt(ym)} '
                f'L {_fmt(w - 8)} {_fmt(ym + 5)} Z" fill="#2b6cb0"/>'
            )
    axis_y = plot_h + 0.5
    parts.append(
        f'<line x1="0" y1="{_fmt(axis_y)}" x2="{w}" y2="{_fmt(axis_y)}" '
        f'stroke="#444" stroke-width="1"/>'
    )
    parts.append(
        f'<text x="2" y="{_fmt(axis_y + 14)}" font-family="monospace" font-size="11" '
        f'fill="#444">0</text>'
    )
    parts.append(
        f'<text x="{_fmt(w - 2)}" y="{_fmt(axis_y + 14)}" font-family="monospace" '
        f'font-size="11" fill="#444" text-anchor="end">{format(axis_max, "g")}</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_text(barcode: Barcode, options: RenderOptions = RenderOptions(), columns: int = 72) -> str:
    """One line per interval: dash glyphs proportional to length plus [birth, death)."""
    if columns < 20:
        raise ValueError("need at least 20 columns")
    intervals = _ordered(barcode, options.dim, options.sort)
    if options.axis_max is not None:
        axis_max = options.axis_max
    else:
        reach = [iv.death for iv in intervals if not iv.is_infinite]
        reach += [iv.birth for iv in intervals]
        axis_max = max(reach, default=1.0) or 1.0
    lines = []
    for iv in intervals:
        lead = round(iv.birth / axis_max * columns)
        if iv.is_infinite:
            body = "-" * max(columns - lead, 1) + ">"
            span = f"[{iv.birth:g}, inf)"
        else:
            body = "-" * max(round(iv.length / axis_max * columns), 1)
            span = f"[{iv.birth:g}, {iv.death:g})"
        lines.append(" " * lead + body + " " + span)
    return "\n".join(lines) + "\n" if lines else ""
