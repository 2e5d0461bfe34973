"""Figure construction.

Each builder turns a :class:`FigureSpec` into an :class:`SvgDocument`, drawing
with the stroke styles of the matching component token map. Curves become
``<path>`` elements, strings and segments ``<line>`` elements and the polygon
outline a ``<polygon>``, so the number of paths in a figure is known in
advance (see :func:`expected_path_count`).
"""

from __future__ import annotations

import logging
import math
from typing import Callable, Optional

from involute_tower.core.models import FigureSpec
from involute_tower.core.types import ORIGIN, Point2
from involute_tower.curves.curve import circle
from involute_tower.curves.involute import InvoluteCurve, build_tower, involute, sample
from involute_tower.curves.polygon import RegularPolygon, polygon_involute
from involute_tower.render.svg import SvgDocument, ViewBox
from involute_tower.ui.design.components import PolygonFigure, TowerFigure
from involute_tower.ui.design.registry import theme_registry
from involute_tower.ui.design.themes import Theme

logger = logging.getLogger(__name__)

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def subscript(k: int) -> str:
    return str(k).translate(_SUBSCRIPTS)


def segment_label(k: int) -> str:
    """θ, θ²/2!, θ³/3!, ... for segment A_{k-1}A_k."""
    if k == 1:
        return "θ"
    return f"θ{str(k).translate(_SUPERSCRIPTS)}/{k}!"


def vertex_label(i: int) -> str:
    return chr(ord("A") + i) if i < 26 else f"V{subscript(i)}"


def radius_label(k: int) -> str:
    return "a" if k == 1 else f"{k}a"


def expected_path_count(spec: FigureSpec) -> int:
    """Number of ``<path>`` elements the figure for spec contains."""
    if spec.kind == "tower":
        return spec.depth + 1
    if spec.kind == "polygon":
        return spec.n * spec.turns
    return 2


def _view(spec: FigureSpec, points: list[Point2]) -> ViewBox:
    if spec.zoom is not None:
        z = spec.zoom
        return ViewBox(z.x0, z.y0, z.x1, z.y1)
    return ViewBox.around(points)


def _document(
    spec: FigureSpec, theme: Theme, points: list[Point2], title: str
) -> SvgDocument:
    return SvgDocument(
        _view(spec, points), theme, width=spec.width, height=spec.height, title=title
    )


# ============================================================================
# Builders
# ============================================================================


def tower_figure(spec: FigureSpec, theme: Theme) -> SvgDocument:
    """The arc AA_0, its involutes up to AA_depth and the segments A_{k-1}A_k."""
    tokens = TowerFigure()
    tower = build_tower(spec.theta, spec.depth)
    traces = [[p for _, p in sample(curve, spec.samples)] for curve in tower.curves]

    points = [ORIGIN] + [p for trace in traces for p in trace]
    doc = _document(spec, theme, points, f"Involute tower, theta={spec.theta:g}")

    start = tower.start
    doc.line(ORIGIN, start, tokens.construction)
    doc.line(ORIGIN, tower.endpoints[0], tokens.construction)
    for k, trace in enumerate(traces):
        doc.polyline(trace, tokens.base if k == 0 else tokens.level(k))

    for k in range(1, tower.depth + 1):
        a, b = tower.endpoints[k - 1], tower.endpoints[k]
        doc.line(a, b, tokens.segment)
        doc.label((a + b) * 0.5, segment_label(k))

    doc.dot(ORIGIN, tokens.label)
    doc.label(ORIGIN, "O", dx=-14.0, dy=14.0)
    doc.dot(start, tokens.label)
    doc.label(start, "A")
    for k, endpoint in enumerate(tower.endpoints):
        doc.dot(endpoint, tokens.label)
        doc.label(endpoint, f"A{subscript(k)}", dy=14.0)
    return doc


def arc_string_figure(spec: FigureSpec, theme: Theme) -> SvgDocument:
    """The arc AA_0, its involute AA_1 and the taut string at t = ``at``."""
    tokens = TowerFigure()
    tower = build_tower(spec.theta, 1)
    base, curve = tower.curves
    assert isinstance(curve, InvoluteCurve)
    at = spec.at if spec.at is not None else spec.theta / 2

    base_trace = [p for _, p in sample(base, spec.samples)]
    involute_trace = [p for _, p in sample(curve, spec.samples)]
    doc = _document(
        spec,
        theme,
        [ORIGIN, *base_trace, *involute_trace],
        f"Unwinding the arc, theta={spec.theta:g}",
    )

    doc.line(ORIGIN, tower.start, tokens.construction)
    doc.line(ORIGIN, tower.endpoints[0], tokens.construction)
    doc.polyline(base_trace, tokens.base)
    doc.polyline(involute_trace, tokens.level(1))

    peel, free_end = curve.string_segment(at)
    doc.line(peel, free_end, tokens.string)
    for point, text in (
        (tower.start, "A"),
        (tower.endpoints[0], f"A{subscript(0)}"),
        (tower.endpoints[1], f"A{subscript(1)}"),
        (peel, "P"),
        (free_end, f"P{subscript(1)}"),
    ):
        doc.dot(point, tokens.label)
        doc.label(point, text)
    doc.dot(ORIGIN, tokens.label)
    doc.label(ORIGIN, "O", dx=-14.0, dy=14.0)
    return doc


def circle_involute_figure(spec: FigureSpec, theme: Theme) -> SvgDocument:
    """Unit circle and one turn of its involute, with the string at t = pi."""
    tokens = TowerFigure()
    curve = involute(circle())
    base_trace = [p for _, p in sample(curve.base, spec.samples)]
    spiral = [p for _, p in sample(curve, spec.samples)]
    doc = _document(spec, theme, [*base_trace, *spiral], "Involute of the circle")

    doc.polyline(base_trace, tokens.base)
    doc.polyline(spiral, tokens.level(1))
    peel, free_end = curve.string_segment(math.pi)
    doc.line(peel, free_end, tokens.string)
    doc.dot(ORIGIN, tokens.label)
    doc.label(ORIGIN, "O")
    return doc


def polygon_figure(spec: FigureSpec, theme: Theme) -> SvgDocument:
    """Regular polygon, its involute arcs and the string at each junction."""
    tokens = PolygonFigure()
    poly = RegularPolygon(spec.n, spec.side)
    chain = polygon_involute(poly, turns=spec.turns)
    # Arcs are drawn as single arc commands, so samples only size the view
    points = [*poly.vertices, *(p for _, p in chain.sample(max(spec.samples // 8, 2)))]
    doc = _document(spec, theme, points, f"Involute of the regular {spec.n}-gon")

    doc.polygon(poly.vertices, tokens.outline)
    for arc in chain.arcs:
        doc.arc(arc, tokens.involute)

    for k, arc in enumerate(chain.arcs, start=1):
        end = arc.end_point
        doc.line(arc.center, end, tokens.string)
        doc.label((arc.center + end) * 0.5, radius_label(k))
        if k <= spec.n:
            center_index = poly.vertices.index(arc.center)
            doc.dot(end, tokens.label)
            doc.label(end, vertex_label(center_index) + "′")

    for i, vertex in enumerate(poly.vertices):
        doc.dot(vertex, tokens.label)
        doc.label(vertex, vertex_label(i))
    return doc


_BUILDERS: dict[str, Callable[[FigureSpec, Theme], SvgDocument]] = {
    "tower": tower_figure,
    "arc-string": arc_string_figure,
    "circle-involute": circle_involute_figure,
    "polygon": polygon_figure,
}


def build_figure(spec: FigureSpec, theme: Optional[Theme] = None) -> SvgDocument:
    """Build the figure described by spec.

    Args:
        spec: Figure kind and parameters
        theme: Theme for the strokes; defaults to the current theme

    Returns:
        The finished SVG document
    """
    if theme is None:
        theme = theme_registry.get_current()
    logger.debug("rendering %s figure with theme %s", spec.kind, theme.name)
    return _BUILDERS[spec.kind](spec, theme)
