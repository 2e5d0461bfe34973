"""The ``involute`` subcommand: unwind a single curve."""

from __future__ import annotations

import argparse
import logging
from typing import Optional

from involute_tower.commands.common import add_output_arguments, angle
from involute_tower.core.types import ORIGIN, Vec2
from involute_tower.core.validators import (
    ValidationError,
    validate_samples,
    validate_theta,
)
from involute_tower.curves.curve import ParametricCurve, circle, line, parabola, unit_arc
from involute_tower.curves.involute import InvoluteCurve, involute, sample
from involute_tower.render.export import (
    curve_report,
    involute_samples,
    samples_to_csv,
    to_json,
    write_output,
)
from involute_tower.render.svg import SvgDocument, ViewBox
from involute_tower.ui.design.components import TowerFigure
from involute_tower.ui.design.registry import theme_registry

logger = logging.getLogger(__name__)

CURVES = ("circle", "arc", "parabola", "line")


def add_subparser(sub: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    """Register the ``involute`` subcommand."""
    parser = sub.add_parser(
        "involute",
        help="Unwind a single curve",
        description=(
            "Compute the involute of a built-in curve with the string attached "
            "at the start of the parameter interval."
        ),
    )
    parser.add_argument(
        "--curve", choices=CURVES, default="circle", help="Base curve (default: circle)"
    )
    parser.add_argument(
        "--theta", type=angle, default=1.0, help="Angle of the arc curve (default: 1)"
    )
    parser.add_argument(
        "--start", type=angle, default=None, help="Start of the parameter interval"
    )
    parser.add_argument(
        "--end", type=angle, default=None, help="End of the parameter interval"
    )
    parser.add_argument(
        "--samples", type=int, default=200, help="Samples per curve (default: 200)"
    )
    add_output_arguments(parser, ("csv", "json", "svg"), "csv")
    parser.set_defaults(func=run)


def base_curve(
    name: str, theta: float, start: Optional[float], end: Optional[float]
) -> ParametricCurve:
    """The named base curve on [start, end], each bound defaulting to its own.

    Raises:
        ValidationError: If the interval is empty or theta is out of range
    """
    if name == "arc":
        validate_theta(theta)
        curve = unit_arc(theta)
    elif name == "parabola":
        curve = parabola()
    elif name == "line":
        curve = line(ORIGIN, Vec2(1.0, 0.0))
    else:
        curve = circle()

    if start is None and end is None:
        return curve
    a = curve.domain.a if start is None else start
    b = curve.domain.b if end is None else end
    if not a < b:
        raise ValidationError(
            f"--start must be less than --end, got [{a!r}, {b!r}]",
            [f"The default interval of {name} is [{curve.domain.a:g}, {curve.domain.b:g}]"],
        )
    return curve.restrict(a, b)


def involute_svg(curve: InvoluteCurve, samples: int) -> str:
    """Base curve and its involute, with the string at mid-interval."""
    tokens = TowerFigure()
    base_trace = [p for _, p in sample(curve.base, samples)]
    trace = [p for _, p in sample(curve, samples)]
    doc = SvgDocument(
        ViewBox.around([*base_trace, *trace]),
        theme_registry.get_current(),
        title=f"Involute of the {curve.base.name}",
    )
    doc.polyline(base_trace, tokens.base)
    doc.polyline(trace, tokens.level(1))
    peel, free_end = curve.string_segment(0.5 * (curve.domain.a + curve.domain.b))
    doc.line(peel, free_end, tokens.string)
    return doc.to_string()


def run(args: argparse.Namespace) -> int:
    """Execute the involute subcommand."""
    validate_samples(args.samples)
    curve = involute(base_curve(args.curve, args.theta, args.start, args.end))

    if args.format == "svg":
        text = involute_svg(curve, args.samples)
    elif args.format == "json":
        text = to_json(curve_report(curve, args.samples))
    else:
        text = samples_to_csv(involute_samples(curve, args.samples))

    write_output(text, args.out)
    logger.debug("involute of %s: wrote %s to %s", args.curve, args.format, args.out)
    return 0
