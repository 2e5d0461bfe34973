"""The ``render`` subcommand: draw a figure as SVG."""

from __future__ import annotations

import argparse
import logging
from typing import get_args

from involute_tower.commands.common import angle, make_figure_spec, zoom
from involute_tower.core.models import FigureKind
from involute_tower.core.validators import validate_depth
from involute_tower.render.export import write_output
from involute_tower.render.figures import build_figure, expected_path_count

logger = logging.getLogger(__name__)


def add_subparser(sub: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    """Register the ``render`` subcommand."""
    parser = sub.add_parser(
        "render",
        help="Draw a figure as SVG",
        description="Write an SVG 1.1 figure of an arc, a tower or a polygon involute.",
    )
    parser.add_argument(
        "--kind", choices=get_args(FigureKind), required=True, help="Figure to draw"
    )
    parser.add_argument("--theta", type=angle, default=1.0, help="Arc angle")
    parser.add_argument("--depth", type=int, default=4, help="Tower depth")
    parser.add_argument("--n", type=int, default=5, help="Polygon vertex count")
    parser.add_argument("--side", type=float, default=1.0, help="Polygon side")
    parser.add_argument("--turns", type=int, default=1, help="Trips around the polygon")
    parser.add_argument("--samples", type=int, default=200, help="Samples per curve")
    parser.add_argument(
        "--at", type=angle, default=None, help="String parameter (default: theta/2)"
    )
    parser.add_argument("--width", type=float, default=640.0, help="Width in pixels")
    parser.add_argument("--height", type=float, default=640.0, help="Height in pixels")
    parser.add_argument(
        "--zoom", type=zoom, default=None, help="Visible window x0,y0,x1,y1"
    )
    parser.add_argument("--out", default="-", help="SVG file (default: stdout)")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    """Execute the render subcommand."""
    spec = make_figure_spec(
        kind=args.kind,
        theta=args.theta,
        depth=args.depth,
        n=args.n,
        side=args.side,
        turns=args.turns,
        samples=args.samples,
        at=args.at,
        width=args.width,
        height=args.height,
        zoom=args.zoom,
    )
    if spec.kind == "tower":
        validate_depth(spec.depth)

    write_output(build_figure(spec).to_string(), args.out)
    logger.debug(
        "rendered %s with %d paths to %s",
        spec.kind,
        expected_path_count(spec),
        args.out,
    )
    return 0
