"""Test package for CLI Patterns."""
