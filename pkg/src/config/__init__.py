"""
Configuration package for the toolkit.
"""

from .settings import settings

__all__ = ["settings"]
