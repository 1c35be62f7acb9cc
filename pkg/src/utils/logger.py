"""
Logging setup shared by the command-line front end and the tests.
"""

import logging
import sys
from typing import Optional

from src.config import settings

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


def configure_logging(level: Optional[int] = None) -> logging.Logger:
    """
    Install a single stderr handler on the package logger.

    Args:
        level: Logging level; defaults to the configured verbosity

    Returns:
        The package logger
    """
    root = logging.getLogger("src")
    if level is None:
        level = settings.log_level()

    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)

    root.setLevel(level)
    return root
