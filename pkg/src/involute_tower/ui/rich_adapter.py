"""Rich adapter mapping design tokens to rich consoles, tables and panels."""

from __future__ import annotations

from typing import Optional

from rich.box import ROUNDED, SIMPLE_HEAVY
from rich.console import Console
from rich.panel import Panel
from rich.style import Style
from rich.table import Table
from rich.text import Text
from rich.theme import Theme as RichTheme

from involute_tower.core.models import InductionReport, VerificationReport

from .design.components import ReportTable
from .design.registry import theme_registry
from .design.tokens import EmphasisToken, StatusToken


class RichAdapter:
    """Builds themed rich renderables from reports."""

    def __init__(self) -> None:
        self.table_tokens = ReportTable()

    def create_console(self, stderr: bool = False) -> Console:
        """Create a Console with the current theme's styles registered.

        Styles are available as ``status.<name>`` and ``emphasis.<name>``.
        """
        return Console(
            theme=self._create_rich_theme(), stderr=stderr, legacy_windows=False
        )

    def _create_rich_theme(self) -> RichTheme:
        current_theme = theme_registry.get_current()
        styles = {}

        for status in StatusToken:
            styles[f"status.{status.value}"] = self._parse(current_theme.statuses[status])

        for emphasis in EmphasisToken:
            styles[f"emphasis.{emphasis.value}"] = self._parse(
                current_theme.emphases[emphasis]
            )

        return RichTheme(styles)

    def _parse(self, style_str: str) -> Style:
        """Parse "bold #c62828" style strings; "default" means no styling."""
        parts = [part for part in style_str.split() if part != "default"]
        return Style.parse(" ".join(parts)) if parts else Style()

    def verification_table(self, report: VerificationReport) -> Table:
        """One row per check with expected, actual, tolerance, outcome and detail."""
        tokens = self.table_tokens
        header = f"emphasis.{tokens.header_emphasis.value}"
        number = f"emphasis.{tokens.number_emphasis.value}"
        detail = f"status.{tokens.detail_status.value}"
        table = Table(box=SIMPLE_HEAVY, header_style=header, title="Verification")
        table.add_column("check")
        table.add_column("expected", justify="right", style=number)
        table.add_column("actual", justify="right", style=number)
        table.add_column("tol", justify="right", style=number)
        table.add_column("result")
        table.add_column("detail", style=detail)

        for check in report.checks:
            status = f"status.{tokens.status_for(check.passed).value}"
            table.add_row(
                check.name,
                f"{check.expected:.12g}",
                f"{check.actual:.12g}",
                f"{check.tolerance:.1e}",
                Text("pass" if check.passed else "FAIL", style=status),
                check.detail or "",
            )
        return table

    def summary(self, report: VerificationReport) -> Text:
        failures = len(report.failures())
        status = self.table_tokens.status_for(report.passed)
        message = (
            f"all {len(report.checks)} checks passed"
            if report.passed
            else f"{failures} of {len(report.checks)} checks failed"
        )
        return Text(message, style=f"status.{status.value}")

    def transcript_panel(
        self, title: str, lines: list[str], induction: Optional[InductionReport] = None
    ) -> Panel:
        """Panel with a derivation transcript and, optionally, the step results."""
        body = Text("\n".join(lines))
        if induction is not None:
            for step in induction.steps:
                status = self.table_tokens.status_for(step.passed)
                line = f"AA{step.k} -> AA{step.k + 1}: s(t) = {step.s_coeff}*t^{step.s_degree}"
                body.append("\n" + line, style=f"status.{status.value}")
        return Panel(body, title=title, title_align="left", box=ROUNDED)


# Global adapter instance
rich_adapter = RichAdapter()
