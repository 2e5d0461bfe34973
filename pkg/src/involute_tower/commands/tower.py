"""The ``tower`` subcommand: build the involute tower of a unit arc."""

from __future__ import annotations

import argparse
import logging

from involute_tower.commands.common import add_output_arguments, angle, make_figure_spec
from involute_tower.core.config import get_config
from involute_tower.core.validators import (
    validate_depth,
    validate_samples,
    validate_theta,
)
from involute_tower.curves.involute import build_tower
from involute_tower.render.export import (
    samples_to_csv,
    to_json,
    tower_report,
    tower_samples,
    write_output,
)
from involute_tower.render.figures import build_figure

logger = logging.getLogger(__name__)


def add_subparser(sub: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    """Register the ``tower`` subcommand."""
    parser = sub.add_parser(
        "tower",
        help="Build the involute tower of a unit arc",
        description=(
            "Unwind the unit arc of angle THETA repeatedly and report the "
            "endpoints A_k, the segment lengths theta^k/k! and the remainder "
            "bounds, or write samples of every level as CSV or an SVG figure."
        ),
    )
    parser.add_argument(
        "--theta", type=angle, default=1.0, help="Arc angle in (0, pi/2] (default: 1)"
    )
    parser.add_argument(
        "--depth", type=int, default=4, help="Number of involutes (default: 4)"
    )
    parser.add_argument(
        "--samples", type=int, default=200, help="Samples per level (default: 200)"
    )
    add_output_arguments(parser, ("json", "csv", "svg"), "json")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    """Execute the tower subcommand."""
    config = get_config()
    validate_theta(args.theta)
    validate_depth(args.depth, config["max_depth"])
    validate_samples(args.samples)

    if args.format == "svg":
        spec = make_figure_spec(
            kind="tower", theta=args.theta, depth=args.depth, samples=args.samples
        )
        text = build_figure(spec).to_string()
    else:
        tower = build_tower(args.theta, args.depth)
        if args.format == "csv":
            text = samples_to_csv(tower_samples(tower, args.samples))
        else:
            text = to_json(tower_report(tower, config["check_tol"]))

    write_output(text, args.out)
    logger.debug("tower: wrote %s to %s", args.format, args.out)
    return 0
