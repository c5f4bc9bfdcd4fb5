"""SVG pictures of a convexly punctured disc with chosen subsets outlined."""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .convex import ConvexDisc, PunctureSet

SIZE = 240
RADIUS = 90.0
LABEL_RADIUS = 106.0
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def puncture_position(k: int, n: int, radius: float = RADIUS) -> tuple[float, float]:
    """Label 1 at the top, labels increasing clockwise."""
    angle = 2 * math.pi * (k - 1) / n
    c = SIZE / 2
    return c + radius * math.sin(angle), c - radius * math.cos(angle)


def emit_diagram(n: int, sets: Sequence[Iterable[int]] = ()) -> str:
    """Return an SVG 1.1 document; the same input always gives the same bytes."""
    disc = ConvexDisc(n)
    hulls = [PunctureSet(disc, s) for s in sets]
    if any(not len(h) for h in hulls):
        raise ValueError("cannot draw the hull of an empty set")
    c = SIZE / 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<circle cx="{_fmt(c)}" cy="{_fmt(c)}" r="{_fmt(RADIUS + 6)}" fill="none" stroke="#444444" stroke-width="1.5"/>',
    ]
    for idx, h in enumerate(hulls):
        color = COLORS[idx % len(COLORS)]
        pts = [puncture_position(k, n) for k in h.members]
        style = f'fill="{color}" fill-opacity="0.15" stroke="{color}" stroke-width="2"'
        if len(pts) == 1:
            x, y = pts[0]
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="9.00" {style}/>')
        else:
            coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in pts)
            out.append(f'<polygon points="{coords}" stroke-linejoin="round" {style}/>')
    for k in disc.labels:
        x, y = puncture_position(k, n)
        lx, ly = puncture_position(k, n, LABEL_RADIUS)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.50" fill="#000000"/>')
        out.append(
            f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-family="sans-serif" font-size="12" '
            f'text-anchor="middle" dominant-baseline="central">{k}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
