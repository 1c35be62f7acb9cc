"""
Result writing: GV tables as CSV, tables and traces as JSON documents.
Output is byte-deterministic for identical inputs.
"""

import json
import logging
from typing import Any, Dict

from src.config import settings
from src.utils.errors import DocumentError
from src.vertex.tables import GVTable

logger = logging.getLogger(__name__)


def dumps(document: Dict[str, Any]) -> str:
    return json.dumps(document, sort_keys=True, indent=settings.JSON_INDENT, ensure_ascii=False) + "\n"


class ResultWriter:
    """
    Writes results to local files.
    """

    def write_table(self, table: GVTable, path: str) -> None:
        """
        Save a table as CSV, or as a JSON document when the path ends in .json.

        Args:
            table: GV table
            path: output file

        Raises:
            DocumentError: If the file cannot be written
        """
        if path.endswith(".json"):
            self.write_text(dumps(table.to_document()), path)
        else:
            self.write_text(table.to_csv(), path)
        logger.info("[LOAD] saved %d rows to %s", len(table), path)

    def write_document(self, document: Dict[str, Any], path: str) -> None:
        self.write_text(dumps(document), path)
        logger.info("[LOAD] saved document to %s", path)

    @staticmethod
    def write_text(text: str, path: str) -> None:
        try:
            with open(path, "w", encoding="utf-8", newline="") as f:
                f.write(text)
        except OSError as e:
            raise DocumentError(f"cannot write {path}: {e.strerror or e}") from e
