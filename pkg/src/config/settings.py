"""
Configuration settings for the toric open Gromov-Witten toolkit.
Holds the verbosity switch and the fixed constants every run depends on.
"""

import logging
import os
from typing import Tuple


class Settings:
    """
    Application settings and constants.

    Only the output verbosity comes from the environment; every value that
    can change a published number is a constant so tables stay reproducible.
    """

    # Output verbosity (the one environment-driven switch)
    LOG_LEVEL: str = os.getenv("TORIC_GW_LOG_LEVEL", "WARNING")

    # Invariant computation defaults
    DEFAULT_CAP: int = 3
    DEFAULT_WORKERS: int = 1

    # Global sign of the genus-zero extraction, calibrated on the conifold
    EXTRACTION_SIGN: int = -1

    # Upper bound on perceptron rounds when searching a positive class grading
    GRADING_MAX_ROUNDS: int = 10000

    # Fan document keys
    RAYS_KEY: str = "rays"
    CONES_KEY: str = "cones"
    CLASSES_KEY: str = "classes"

    # Output formatting
    JSON_INDENT: int = 2
    INVARIANT_COLUMN: str = "invariant"

    # Exit codes of the command-line front end
    EXIT_OK: int = 0
    EXIT_DOMAIN_ERROR: int = 1
    EXIT_PARSE_ERROR: int = 2

    @classmethod
    def log_level(cls) -> int:
        """
        Parse LOG_LEVEL into a logging level.

        Returns:
            Numeric logging level

        Raises:
            ValueError: If the level name is unknown
        """
        level = logging.getLevelName(cls.LOG_LEVEL.upper())
        if not isinstance(level, int):
            raise ValueError(f"Invalid TORIC_GW_LOG_LEVEL value: {cls.LOG_LEVEL}")
        return level

    @classmethod
    def table_columns(cls, basis_names: Tuple[str, ...]) -> Tuple[str, ...]:
        """
        Column layout of a GV table: one column per basis class, then the invariant.

        Args:
            basis_names: Names of the basis classes in order

        Returns:
            Tuple of column names
        """
        return tuple(basis_names) + (cls.INVARIANT_COLUMN,)


settings = Settings()
