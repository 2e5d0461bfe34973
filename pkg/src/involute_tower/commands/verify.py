"""The ``verify`` subcommand: run the verification suite."""

from __future__ import annotations

import argparse

from involute_tower.commands.common import angle
from involute_tower.core.config import get_config
from involute_tower.core.models import VerificationReport
from involute_tower.core.validators import validate_depth
from involute_tower.render.export import to_json, write_output
from involute_tower.symbolic.induction import involute_transcript, verify_induction
from involute_tower.symbolic.trig import TrigPolyCurve
from involute_tower.ui.rich_adapter import rich_adapter
from involute_tower.verify.suite import DEFAULT_MAX_DEPTH, run_verification


def thetas(text: str) -> tuple[float, ...]:
    """argparse type for a non-empty comma-separated list of angles."""
    parsed = tuple(angle(part.strip()) for part in text.split(",") if part.strip())
    if not parsed:
        raise argparse.ArgumentTypeError("expected at least one angle")
    return parsed


def add_subparser(sub: argparse._SubParsersAction[argparse.ArgumentParser]) -> None:
    """Register the ``verify`` subcommand."""
    parser = sub.add_parser(
        "verify",
        help="Check the closed forms symbolically and numerically",
        description=(
            "Run the symbolic induction, the partial-sum identities and the "
            "numeric tower checks. Prints a JSON report and exits 0 only if "
            "every check passes."
        ),
    )
    parser.add_argument(
        "--max-depth",
        type=int,
        default=DEFAULT_MAX_DEPTH,
        help=f"Deepest tower level checked (default: {DEFAULT_MAX_DEPTH})",
    )
    parser.add_argument(
        "--thetas",
        type=thetas,
        default="0.3,1.0,pi/3",
        help="Comma-separated arc angles (default: 0.3,1.0,pi/3)",
    )
    parser.add_argument(
        "--tol",
        type=float,
        default=None,
        help="Tolerance for numeric checks (default: 1e-7)",
    )
    parser.add_argument(
        "--transcript",
        action="store_true",
        help="Print the derivation of each induction step on stderr",
    )
    parser.add_argument("--out", default="-", help="JSON file (default: stdout)")
    parser.set_defaults(func=run)


def print_transcript(max_depth: int) -> None:
    console = rich_adapter.create_console(stderr=True)
    lines: list[str] = []
    curve = TrigPolyCurve.unit_arc()
    for k in range(max_depth):
        lines.append(f"# AA{k} -> AA{k + 1}")
        lines.extend(involute_transcript(curve))
        curve = TrigPolyCurve.from_closed_form(k + 1)
    induction = verify_induction(max(1, max_depth - 1))
    console.print(rich_adapter.transcript_panel("Induction", lines, induction))


def run(args: argparse.Namespace) -> int:
    """Execute the verify subcommand."""
    validate_depth(args.max_depth, get_config()["max_depth"])
    report = run_verification(args.max_depth, args.thetas, args.tol)
    if args.transcript:
        print_transcript(args.max_depth)

    console = rich_adapter.create_console(stderr=True)
    if not report.passed:
        failed = VerificationReport(checks=report.failures())
        console.print(rich_adapter.verification_table(failed))
    console.print(rich_adapter.summary(report))

    write_output(to_json(report), args.out)
    return 0 if report.passed else 1
