"""
Fan document reading.
A fan document is a JSON object with integer ray triples, cone index
triples and optional named classes.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple

from src.config import settings
from src.homology.classes import CurveClass
from src.lattice.fan import Fan, validate_fan
from src.utils.errors import DocumentError, FanError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FanDocument:
    """A parsed fan with its named classes in document order."""

    fan: Fan
    classes: Dict[str, Tuple[int, ...]] = field(default_factory=dict)
    source: str = "<string>"

    def checked(self) -> "FanDocument":
        """
        Raises:
            FanError: If the fan fails validation
            ClassTransportError: If a named class violates the kernel condition
        """
        report = validate_fan(self.fan)
        if not report.is_valid:
            raise FanError(f"invalid fan in {self.source}: {report.violations[0]}")
        for vector in self.classes.values():
            CurveClass(vector).checked(self.fan)
        return self


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class FanDocumentReader:
    """
    Reads fan documents from disk or from text.
    """

    def read(self, path: str) -> FanDocument:
        """
        Read and parse a fan document.

        Args:
            path: Path to the JSON document

        Returns:
            FanDocument (not yet validated)

        Raises:
            DocumentError: If the file cannot be read or parsed
        """
        try:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise DocumentError(f"cannot read {path}: {e.strerror or e}") from e
        logger.info("[EXTRACT] read %s (%d bytes)", path, len(text))
        return self.parse(text, path)

    def parse(self, text: str, source: str = "<string>") -> FanDocument:
        """
        Parse the JSON text of a fan document.

        Raises:
            DocumentError: With line and column on malformed JSON, or naming
                the offending key on a malformed field
        """
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DocumentError(f"{source}: {e.msg}", e.lineno, e.colno) from e
        if not isinstance(data, dict):
            raise DocumentError(f"{source}: top level must be an object")

        rays = self._triples(data, settings.RAYS_KEY, source)
        cones = self._triples(data, settings.CONES_KEY, source)
        for cone in cones:
            if any(i < 0 or i >= len(rays) for i in cone):
                raise DocumentError(f"{source}: cone {list(cone)} refers to a missing ray")
        classes = self._classes(data.get(settings.CLASSES_KEY, {}), len(rays), source)
        return FanDocument(Fan(tuple(rays), tuple(cones)), classes, source)

    @staticmethod
    def _triples(data: Dict[str, Any], key: str, source: str) -> List[Tuple[int, int, int]]:
        if key not in data:
            raise DocumentError(f"{source}: missing key '{key}'")
        rows = data[key]
        if not isinstance(rows, list):
            raise DocumentError(f"{source}: '{key}' must be a list")
        result = []
        for k, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != 3 or not all(_is_int(x) for x in row):
                raise DocumentError(f"{source}: {key}[{k}] must be three integers, got {row!r}")
            result.append(tuple(row))
        return result

    @staticmethod
    def _classes(raw: Any, ray_count: int, source: str) -> Dict[str, Tuple[int, ...]]:
        if not isinstance(raw, dict):
            raise DocumentError(f"{source}: '{settings.CLASSES_KEY}' must be an object")
        classes = {}
        for name, vector in raw.items():
            if not isinstance(vector, list) or len(vector) != ray_count or not all(_is_int(x) for x in vector):
                raise DocumentError(f"{source}: class '{name}' must be {ray_count} integers, got {vector!r}")
            classes[name] = tuple(vector)
        return classes
