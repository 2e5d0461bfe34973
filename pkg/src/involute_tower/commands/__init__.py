"""CLI subcommands, one module each with ``add_subparser`` and ``run``."""

from involute_tower.commands import involute, polygon, render, tower, verify

COMMANDS = (tower, involute, polygon, render, verify)

__all__ = ["COMMANDS"]
