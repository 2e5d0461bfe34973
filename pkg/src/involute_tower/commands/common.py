"""Argument types and helpers shared by the subcommands."""

from __future__ import annotations

import argparse
from typing import Any, Sequence

import pydantic

from involute_tower.core.models import FigureSpec, ZoomWindow
from involute_tower.core.validators import ValidationError, parse_angle


def angle(text: str) -> float:
    """argparse type for angles such as ``1.2``, ``pi/3`` or ``2*pi/5``."""
    try:
        return parse_angle(text)
    except ValidationError as error:
        raise argparse.ArgumentTypeError(error.message) from error


def zoom(text: str) -> ZoomWindow:
    """argparse type for a zoom window ``x0,y0,x1,y1``."""
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected x0,y0,x1,y1, got {text!r}")
    try:
        x0, y0, x1, y1 = (float(part) for part in parts)
        return ZoomWindow(x0=x0, y0=y0, x1=x1, y1=y1)
    except (ValueError, pydantic.ValidationError) as error:
        raise argparse.ArgumentTypeError(f"invalid zoom window {text!r}") from error


def add_output_arguments(
    parser: argparse.ArgumentParser, formats: Sequence[str], default: str
) -> None:
    parser.add_argument(
        "--format",
        choices=tuple(formats),
        default=default,
        help=f"Output format (default: {default})",
    )
    parser.add_argument(
        "--out",
        default="-",
        help="Output file (default: '-' for stdout)",
    )


def make_figure_spec(**fields: Any) -> FigureSpec:
    """FigureSpec from flag values.

    Raises:
        ValidationError: If the values do not form a valid figure
    """
    try:
        return FigureSpec(**fields)
    except pydantic.ValidationError as error:
        messages = [str(e["msg"]) for e in error.errors()]
        raise ValidationError("; ".join(messages)) from error
