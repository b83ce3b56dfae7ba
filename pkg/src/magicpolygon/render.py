"""SVG diagrams of labeled polygons.

Vertex 1 sits at twelve o'clock and indices run clockwise.  Every line is a
single segment between its two end nodes (the middle node is collinear).
Coordinates are printed with fixed precision, so output is byte-stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import CENTER, Labeling, NodeId, NodeKind, lines, nodes


@dataclass(frozen=True)
class RenderStyle:
    radius: float = 200.0
    node_radius: float = 18.0
    font_size: int = 16
    margin: float = 30.0
    stroke: str = "#000000"
    fill: str = "#ffffff"
    stroke_width: float = 2.0


DEFAULT_STYLE = RenderStyle()


def _fmt(x: float) -> str:
    s = f"{x:.3f}"
    return "0.000" if s == "-0.000" else s


def positions(n: int, radius: float) -> dict[NodeId, tuple[float, float]]:
    """Node coordinates in SVG space (y grows downward), center at the origin."""
    pos: dict[NodeId, tuple[float, float]] = {CENTER: (0.0, 0.0)}
    for node in nodes(n):
        if node.kind is NodeKind.VERTEX:
            angle = -math.pi / 2 + 2 * math.pi * (node.index - 1) / n
            pos[node] = (radius * math.cos(angle), radius * math.sin(angle))
    for node in nodes(n):
        if node.kind is NodeKind.MIDPOINT:
            i = node.index
            (x1, y1) = pos[NodeId(NodeKind.VERTEX, i)]
            (x2, y2) = pos[NodeId(NodeKind.VERTEX, i % n + 1)]
            pos[node] = ((x1 + x2) / 2, (y1 + y2) / 2)
    return pos


def render_svg(labeling: Labeling, style: RenderStyle = DEFAULT_STYLE) -> str:
    labeling._require_populated()
    n = labeling.n
    pos = positions(n, style.radius)
    half = style.radius + style.node_radius + style.margin
    size = _fmt(2 * half)
    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="{_fmt(-half)} {_fmt(-half)} {size} {size}">',
        f'<g stroke="{style.stroke}" stroke-width="{_fmt(style.stroke_width)}">',
    ]
    for line in lines(n):
        (x1, y1), (x2, y2) = pos[line.nodes[0]], pos[line.nodes[2]]
        out.append(
            f'<line class="{line.kind.value}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}"/>'
        )
    out.append("</g>")
    out.append(
        f'<g font-family="sans-serif" font-size="{style.font_size}" '
        f'text-anchor="middle" dominant-baseline="central">'
    )
    for node in nodes(n):
        x, y = pos[node]
        out.append(
            f'<circle id="{node}" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(style.node_radius)}" '
            f'fill="{style.fill}" stroke="{style.stroke}" stroke-width="{_fmt(style.stroke_width)}"/>'
        )
        out.append(f'<text x="{_fmt(x)}" y="{_fmt(y)}">{labeling[node]}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
