"""Unit tests for CLI Patterns."""
