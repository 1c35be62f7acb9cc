"""
Fan documents in, result files out.
"""

from .reader import FanDocument, FanDocumentReader
from .writer import ResultWriter, dumps

__all__ = ["FanDocument", "FanDocumentReader", "ResultWriter", "dumps"]
