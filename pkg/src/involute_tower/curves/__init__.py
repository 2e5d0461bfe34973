"""Plane curves, involutes and arc length.

- curve: ParametricCurve, arc length, ArcLengthTable, curve factories
- quadrature: adaptive Simpson
- involute: the involute operator and the involute tower
- polygon: involutes of regular polygons as arc chains
"""

from involute_tower.curves.curve import (
    DELTA_SPEED,
    EPS_LIMIT,
    ArcLengthTable,
    ParametricCurve,
    arc_length,
    circle,
    line,
    parabola,
    speed,
    unit_arc,
    unit_tangent,
)
from involute_tower.curves.involute import (
    InvoluteCurve,
    InvoluteTower,
    build_tower,
    involute,
    sample,
)
from involute_tower.curves.polygon import (
    CircularArc,
    PiecewiseArcCurve,
    RegularPolygon,
    arc_chain_length,
    polygon_involute,
)
from involute_tower.curves.quadrature import adaptive_simpson

__all__ = [
    "DELTA_SPEED",
    "EPS_LIMIT",
    "ArcLengthTable",
    "CircularArc",
    "InvoluteCurve",
    "InvoluteTower",
    "ParametricCurve",
    "PiecewiseArcCurve",
    "RegularPolygon",
    "adaptive_simpson",
    "arc_chain_length",
    "arc_length",
    "build_tower",
    "circle",
    "involute",
    "line",
    "parabola",
    "polygon_involute",
    "sample",
    "speed",
    "unit_arc",
    "unit_tangent",
]
