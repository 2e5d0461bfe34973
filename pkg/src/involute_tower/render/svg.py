"""Minimal SVG 1.1 writer for plane figures.

Geometry is given in the mathematical frame (y up). All strokes go into one
group carrying a ``scale(1, -1)`` transform, so no drawing code flips signs.
Text is placed in a separate unflipped group so it reads upright.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence, Union

from involute_tower.core.types import Point2
from involute_tower.curves.polygon import CircularArc
from involute_tower.ui.design.themes import Theme
from involute_tower.ui.design.tokens import StrokeStyle, StrokeToken

SVG_NS = "http://www.w3.org/2000/svg"


def fmt(value: float) -> str:
    """Coordinate text with 9 significant digits and no '-0'."""
    text = f"{value:.9g}"
    return "0" if text == "-0" else text


@dataclass(frozen=True)
class ViewBox:
    """Visible rectangle of the mathematical plane."""

    x0: float
    y0: float
    x1: float
    y1: float

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    @classmethod
    def around(cls, points: Iterable[Point2], padding: float = 0.08) -> ViewBox:
        """Bounding box of points grown by padding times its larger side."""
        xs, ys = [], []
        for p in points:
            xs.append(p.x)
            ys.append(p.y)
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        margin = padding * max(x1 - x0, y1 - y0, 1e-9)
        return cls(x0 - margin, y0 - margin, x1 + margin, y1 + margin)

    def attribute(self) -> str:
        """viewBox value for the flipped frame."""
        return " ".join(fmt(v) for v in (self.x0, -self.y1, self.width, self.height))


class SvgDocument:
    """An SVG 1.1 document with themed drawing helpers.

    Args:
        view: Region of the plane to show
        theme: Theme resolving stroke tokens to colors
        width: Output width in pixels
        height: Output height in pixels
        title: Optional document title
    """

    def __init__(
        self,
        view: ViewBox,
        theme: Theme,
        width: float = 640.0,
        height: float = 640.0,
        title: Optional[str] = None,
    ) -> None:
        self.view = view
        self.theme = theme
        # User units per pixel, to keep stroke widths in pixels
        self.unit = max(view.width / width, view.height / height)

        self.root = ET.Element(
            "svg",
            xmlns=SVG_NS,
            version="1.1",
            width=fmt(width),
            height=fmt(height),
            viewBox=view.attribute(),
        )
        if title:
            ET.SubElement(self.root, "title").text = title
        ET.SubElement(
            self.root,
            "rect",
            x=fmt(view.x0),
            y=fmt(-view.y1),
            width=fmt(view.width),
            height=fmt(view.height),
            fill=theme.background,
        )
        self.plot = ET.SubElement(self.root, "g", transform="scale(1,-1)", fill="none")
        self.labels = ET.SubElement(
            self.root,
            "g",
            fill=theme.color(StrokeToken.LABEL),
            style=f"font-family:serif;font-size:{fmt(14 * self.unit)}px",
        )

    def _stroke(self, element: ET.Element, style: StrokeStyle) -> ET.Element:
        element.set("stroke", self.theme.color(style.color))
        element.set("stroke-width", fmt(style.width * self.unit))
        element.set("stroke-linecap", "round")
        element.set("stroke-linejoin", "round")
        if style.dash:
            dash = " ".join(fmt(float(d) * self.unit) for d in style.dash.split())
            element.set("stroke-dasharray", dash)
        return element

    def polyline(self, points: Sequence[Point2], style: StrokeStyle) -> ET.Element:
        """Open path through the points."""
        commands = [f"M{fmt(points[0].x)} {fmt(points[0].y)}"]
        commands.extend(f"L{fmt(p.x)} {fmt(p.y)}" for p in points[1:])
        return self._stroke(ET.SubElement(self.plot, "path", d=" ".join(commands)), style)

    def arc(self, arc: CircularArc, style: StrokeStyle) -> ET.Element:
        """Circular arc as a path with one elliptical-arc command."""
        start, end = arc.start_point, arc.end_point
        large = 1 if abs(arc.sweep) > math.pi else 0
        # Positive sweep is counterclockwise in the (unflipped) local frame
        sweep = 1 if arc.sweep > 0 else 0
        r = fmt(arc.radius)
        d = (
            f"M{fmt(start.x)} {fmt(start.y)} "
            f"A{r} {r} 0 {large} {sweep} {fmt(end.x)} {fmt(end.y)}"
        )
        return self._stroke(ET.SubElement(self.plot, "path", d=d), style)

    def line(self, a: Point2, b: Point2, style: StrokeStyle) -> ET.Element:
        element = ET.SubElement(
            self.plot, "line", x1=fmt(a.x), y1=fmt(a.y), x2=fmt(b.x), y2=fmt(b.y)
        )
        return self._stroke(element, style)

    def polygon(self, points: Sequence[Point2], style: StrokeStyle) -> ET.Element:
        coords = " ".join(f"{fmt(p.x)},{fmt(p.y)}" for p in points)
        return self._stroke(ET.SubElement(self.plot, "polygon", points=coords), style)

    def dot(
        self, p: Point2, token: StrokeToken = StrokeToken.LABEL, radius: float = 2.5
    ) -> ET.Element:
        return ET.SubElement(
            self.plot,
            "circle",
            cx=fmt(p.x),
            cy=fmt(p.y),
            r=fmt(radius * self.unit),
            fill=self.theme.color(token),
        )

    def label(
        self, p: Point2, text: str, dx: float = 4.0, dy: float = -4.0
    ) -> ET.Element:
        """Text anchored near p, offset by (dx, dy) pixels (dy < 0 is up)."""
        element = ET.SubElement(
            self.labels,
            "text",
            x=fmt(p.x + dx * self.unit),
            y=fmt(-p.y + dy * self.unit),
        )
        element.text = text
        return element

    def to_string(self) -> str:
        body = ET.tostring(self.root, encoding="unicode")
        return f'<?xml version="1.0" encoding="UTF-8"?>\n{body}\n'

    def write(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.to_string(), encoding="utf-8")
