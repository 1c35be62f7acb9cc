"""
Utilities package for common functionality.
"""

from .error_handler import ErrorHandler
from .logger import configure_logging

__all__ = ["ErrorHandler", "configure_logging"]
