"""Logging setup shared by the CLI and the test-suite"""
import logging
import sys

from config.constants import LOG_FORMAT

_LEVELS = [logging.WARNING, logging.INFO, logging.DEBUG]


def setup_logging(verbosity: int = 0) -> None:
    """Route log records to stderr; stdout is reserved for reports."""
    level = _LEVELS[max(0, min(verbosity, len(_LEVELS) - 1))]
    root = logging.getLogger()
    if not any(getattr(h, "_hamrank", False) for h in root.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        handler._hamrank = True
        root.addHandler(handler)
    root.setLevel(level)
