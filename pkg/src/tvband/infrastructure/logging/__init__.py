"""Logging infrastructure."""

from tvband.infrastructure.logging.setup import setup_logging

__all__ = ["setup_logging"]
