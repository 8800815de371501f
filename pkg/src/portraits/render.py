"""Deterministic SVG diagram of a constructed tree.

Exact combinatorics lives upstream; this module is the only place floating
point appears.  The drawing shows the unit circle, each set's star (dashed
spokes from its circle points to their barycenter - decoration, not tree),
the tree vertices and solid edges, local degrees, and dotted arrows for the
vertices the dynamics actually moves.  Output is byte-for-byte reproducible
for a given input.
"""

from __future__ import annotations

import math
from typing import Sequence

from .angles import format_angle
from .builder import ConstructedTree, Region

_SIZE = 560.0
_CENTER = _SIZE / 2
_RADIUS = 230.0


def _point(theta) -> tuple[float, float]:
    x = math.cos(2 * math.pi * float(theta))
    y = math.sin(2 * math.pi * float(theta))
    return (_CENTER + _RADIUS * x, _CENTER - _RADIUS * y)


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def _line(x1, y1, x2, y2, cls: str) -> str:
    return (f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" />')


def _text(x, y, content: str, cls: str) -> str:
    return f'<text class="{cls}" x="{_fmt(x)}" y="{_fmt(y)}">{content}</text>'


def _barycenter(angles) -> tuple[float, float]:
    xs = [_point(a) for a in angles]
    return (sum(x for x, _ in xs) / len(xs), sum(y for _, y in xs) / len(xs))


def _arc_midpoint(arc) -> float:
    span = (arc.end - arc.start) % 1
    if span == 0:
        span = 1
    return float((arc.start + span / 2) % 1)


def _region_center(region: Region, anchors: dict[int, tuple[float, float]]) -> tuple[float, float]:
    # pull the region vertex off the circle: average its arc midpoints with
    # the barycenters of its boundary stars
    points = []
    for arc in region.arcs:
        mid = _arc_midpoint(arc)
        x = _CENTER + 0.84 * _RADIUS * math.cos(2 * math.pi * mid)
        y = _CENTER - 0.84 * _RADIUS * math.sin(2 * math.pi * mid)
        points.append((x, y))
    for j in region.boundary_sets:
        points.append(anchors[j])
    return (sum(x for x, _ in points) / len(points),
            sum(y for _, y in points) / len(points))


def render_svg(ct: ConstructedTree, regions: Sequence[Region]) -> str:
    """Draw the constructed tree over its circle data as an SVG document."""
    t = ct.tree
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{int(_SIZE)}" '
        f'height="{int(_SIZE)}" viewBox="0 0 {int(_SIZE)} {int(_SIZE)}">',
        '<style>',
        '.circle { fill: none; stroke: #888888; stroke-width: 1.2; }',
        '.star { stroke: #777777; stroke-width: 1.0; stroke-dasharray: 5 4; }',
        '.edge { stroke: #111111; stroke-width: 2.0; }',
        '.julia { fill: #111111; }',
        '.fatou { fill: #ffffff; stroke: #111111; stroke-width: 1.8; }',
        '.tau { stroke: #c04040; stroke-width: 1.4; stroke-dasharray: 2 3; '
        'fill: none; marker-end: url(#arrow); }',
        '.label { font: 13px sans-serif; fill: #202020; }',
        '.ray { font: 11px sans-serif; fill: #555555; }',
        '</style>',
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" '
        'markerWidth="7" markerHeight="7" orient="auto-start-reverse">'
        '<path d="M 0 0 L 10 5 L 0 10 z" fill="#c04040" /></marker></defs>',
        f'<circle class="circle" cx="{_fmt(_CENTER)}" cy="{_fmt(_CENTER)}" '
        f'r="{_fmt(_RADIUS)}" />',
    ]

    positions: dict[str, tuple[float, float]] = {}
    set_barycenter: dict[int, tuple[float, float]] = {}

    for j in sorted(ct.julia_vertex_of_set):
        v = ct.julia_vertex_of_set[j]
        angles = ct.arc_anchor[v]
        bary = _barycenter(angles)
        set_barycenter[j] = bary
        positions[v] = bary
        if len(angles) >= 2:
            for a in angles:
                px, py = _point(a)
                parts.append(_line(px, py, bary[0], bary[1], "star"))
        for a in angles:
            px, py = _point(a)
            ox = _CENTER + (_RADIUS + 16) * math.cos(2 * math.pi * float(a))
            oy = _CENTER - (_RADIUS + 16) * math.sin(2 * math.pi * float(a))
            parts.append(_text(ox - 9, oy + 4, format_angle(a), "ray"))

    for r in regions:
        w = ct.fatou_vertex_of_region[r.index]
        positions[w] = _region_center(r, set_barycenter)

    for a, b in t.edges:
        (x1, y1), (x2, y2) = positions[a], positions[b]
        parts.append(_line(x1, y1, x2, y2, "edge"))

    for v in t.vertices:
        if t.tau[v] == v:
            continue
        (x1, y1), (x2, y2) = positions[v], positions[t.tau[v]]
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        nx, ny = -(y2 - y1), (x2 - x1)
        norm = math.hypot(nx, ny) or 1.0
        cx, cy = mx + 24 * nx / norm, my + 24 * ny / norm
        parts.append(f'<path class="tau" d="M {_fmt(x1)} {_fmt(y1)} '
                     f'Q {_fmt(cx)} {_fmt(cy)} {_fmt(x2)} {_fmt(y2)}" />')

    for v in t.vertices:
        x, y = positions[v]
        if v.startswith("v"):
            parts.append(f'<circle class="julia" cx="{_fmt(x)}" cy="{_fmt(y)}" r="4.0" />')
        else:
            parts.append(f'<circle class="fatou" cx="{_fmt(x)}" cy="{_fmt(y)}" r="6.0" />')
        parts.append(_text(x + 8, y - 6, f"{v} &#948;={t.delta[v]}", "label"))

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
