"""
Error handling utilities.
Formats error reports for the command line and picks the exit code.
"""

import logging
import sys
import traceback
from typing import TextIO

from src.config import settings
from src.utils.errors import ToolkitError

logger = logging.getLogger(__name__)


class ErrorHandler:
    """
    Handles errors raised while running a command.
    Writes a framed report to stderr and returns the exit code.
    """

    def __init__(self, stream: TextIO = None):
        """
        Initialize error handler.

        Args:
            stream: Where reports go (defaults to stderr)
        """
        self.stream = stream if stream is not None else sys.stderr

    def handle_error(self, error: Exception, context: str = "") -> int:
        """
        Handle an error by reporting it and mapping it to an exit code.

        Args:
            error: The exception that occurred
            context: Additional context about where the error occurred

        Returns:
            Process exit code (1 domain error, 2 parse/IO error)
        """
        report = self._create_report(error, context)
        print(report, file=self.stream)
        return self.exit_code(error)

    @staticmethod
    def exit_code(error: Exception) -> int:
        """
        Exit code contract for an exception.

        Args:
            error: The exception

        Returns:
            Exit code
        """
        if isinstance(error, ToolkitError):
            return error.exit_code
        if isinstance(error, (OSError, ValueError)):
            return settings.EXIT_PARSE_ERROR
        return settings.EXIT_DOMAIN_ERROR

    def _create_report(self, error: Exception, context: str) -> str:
        """
        Create formatted report content.

        Args:
            error: The exception
            context: Additional context

        Returns:
            Formatted report
        """
        lines = [
            "=" * 70,
            "ERROR",
            "=" * 70,
            f"Context: {context if context else 'General execution error'}",
            f"Error Type: {type(error).__name__}",
            f"Error Message: {error}",
        ]

        # Stack traces only when debugging
        if logger.isEnabledFor(logging.DEBUG):
            lines += ["", "Stack Trace:", traceback.format_exc()]

        lines.append("=" * 70)
        return "\n".join(lines)
