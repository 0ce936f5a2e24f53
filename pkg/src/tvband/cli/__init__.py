"""tvband command-line interface."""

from tvband.cli.main import cli

__all__ = ["cli"]
