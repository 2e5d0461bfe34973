"""Main CLI entry point for involute-tower."""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Optional, Sequence

from rich.console import Console
from rich.logging import RichHandler

from involute_tower import __version__
from involute_tower.commands import COMMANDS
from involute_tower.config.theme_loader import initialize_themes
from involute_tower.core.errors import InvoluteError
from involute_tower.core.validators import ValidationError
from involute_tower.ui.error_formatter import ErrorFormatter

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="involute-tower",
        description=(
            "Involutes of plane curves and the involute tower of a unit arc, "
            "whose endpoints are the partial sums of the cosine and sine series."
        ),
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="Log debug messages to stderr"
    )
    parser.add_argument(
        "--theme", default=None, help="Theme for figures and terminal output"
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for command in COMMANDS:
        command.add_subparser(sub)
    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run the subcommand and map failures to exit codes.

    Returns:
        0 on success, 1 for failed checks and library or I/O errors,
        2 for usage errors
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)

    configure_logging(args.verbose)
    try:
        initialize_themes(args.theme)
        return int(args.func(args))
    except ValidationError as e:
        ErrorFormatter().print_error(e)
        return EXIT_USAGE
    except InvoluteError as e:
        ErrorFormatter().print_error(e)
        return EXIT_FAILURE
    except OSError as e:
        ErrorFormatter().print_error(InvoluteError(f"cannot write output: {e}"))
        return EXIT_FAILURE
    except KeyboardInterrupt:
        print("\nInterrupted", file=sys.stderr)
        return 130


def run() -> None:
    """Console script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
