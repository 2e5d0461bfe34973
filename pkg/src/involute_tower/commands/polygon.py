"""The ``polygon`` subcommand: involute of a regular polygon."""

from __future__ import annotations

import argparse

from involute_tower.commands.common import add_output_arguments, make_figure_spec
from involute_tower.core.validators import (
    ValidationError,
    validate_polygon,
    validate_samples,
)
from involute_tower.curves.polygon import RegularPolygon, polygon_involute
from involute_tower.render.export import (
    polygon_report,
    polygon_samples,
    samples_to_csv,
    to_json,
    write_output,
)
from involute_tower.render.figures import build_figure


def add_subparser(sub: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    """Register the ``polygon`` subcommand."""
    parser = sub.add_parser(
        "polygon",
        help="Involute of a regular polygon",
        description=(
            "Unwind a string wrapped around a regular N-gon. The involute is a "
            "chain of circular arcs with radii SIDE, 2*SIDE, ..."
        ),
    )
    parser.add_argument("--n", type=int, default=5, help="Vertex count (default: 5)")
    parser.add_argument(
        "--side", type=float, default=1.0, help="Side length (default: 1)"
    )
    parser.add_argument(
        "--turns", type=int, default=1, help="Trips around the polygon (default: 1)"
    )
    parser.add_argument(
        "--samples", type=int, default=50, help="CSV samples per arc (default: 50)"
    )
    add_output_arguments(parser, ("json", "svg", "csv"), "json")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    """Execute the polygon subcommand."""
    validate_polygon(args.n, args.side)
    validate_samples(args.samples)
    if args.turns < 1:
        raise ValidationError(f"turns must be at least 1, got {args.turns}")

    if args.format == "svg":
        spec = make_figure_spec(
            kind="polygon", n=args.n, side=args.side, turns=args.turns
        )
        text = build_figure(spec).to_string()
    else:
        poly = RegularPolygon(args.n, args.side)
        chain = polygon_involute(poly, turns=args.turns)
        if args.format == "csv":
            text = samples_to_csv(polygon_samples(chain, args.samples))
        else:
            text = to_json(polygon_report(poly, chain, args.turns))

    write_output(text, args.out)
    return 0
