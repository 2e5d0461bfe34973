"""Tests for the error formatter."""

from __future__ import annotations

import io

import pytest
from rich.console import Console

from involute_tower.core.errors import CurveDomainError, InvoluteError
from involute_tower.ui.error_formatter import ErrorFormatter
from involute_tower.ui.rich_adapter import rich_adapter

pytestmark = pytest.mark.unit


class TestErrorFormatter:
    """Test error rendering."""

    def test_title_and_message(self) -> None:
        text = ErrorFormatter().format_error(InvoluteError("boom"))
        assert text.plain == "INVOLUTE: boom"
        assert text.spans[0].style == "status.fail"

    def test_suggestions_are_bulleted(self) -> None:
        error = CurveDomainError(2.0, 0.0, 1.0)
        text = ErrorFormatter().format_error(error).plain
        assert text.startswith("DOMAIN: ")
        for suggestion in error.suggestions:
            assert f"\n  • {suggestion}" in text

    def test_print_error(self) -> None:
        buffer = io.StringIO()
        console = rich_adapter.create_console()
        console.file = buffer
        ErrorFormatter(console).print_error(InvoluteError("cannot write output"))
        assert "INVOLUTE: cannot write output" in buffer.getvalue()

    def test_default_console_writes_to_stderr(self) -> None:
        assert ErrorFormatter().console.stderr

    def test_explicit_console(self) -> None:
        console = Console()
        assert ErrorFormatter(console).console is console
