"""
Tables of genus-zero invariants and their serialized forms.
"""

import hashlib
import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

import pandas as pd

from src.config import settings
from src.homology.classes import ClassLattice, CurveClass
from src.lattice.fan import Fan
from src.vertex.conventions import ledger_hash

Coordinates = Tuple[int, ...]


def fan_fingerprint(fan: Fan) -> str:
    """sha256 of the fan's rays and cones as given."""
    document = {settings.RAYS_KEY: [list(r) for r in fan.rays], settings.CONES_KEY: [list(c) for c in fan.cones]}
    return hashlib.sha256(json.dumps(document, sort_keys=True).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class GVTable:
    """
    Integer invariants keyed by class coordinates in a chosen basis.

    Only classes complete at the cap are present; `unreachable` lists the
    reached classes that are not.
    """

    lattice: ClassLattice
    cap: int
    invariants: Dict[Coordinates, int] = field(default_factory=dict)
    classes: Dict[Coordinates, CurveClass] = field(default_factory=dict)
    unreachable: Tuple[Coordinates, ...] = ()

    def __getitem__(self, coordinates) -> int:
        return self.invariants[tuple(coordinates)]

    def __contains__(self, coordinates) -> bool:
        return tuple(coordinates) in self.invariants

    def __len__(self) -> int:
        return len(self.invariants)

    def get(self, coordinates, default: Optional[int] = None) -> Optional[int]:
        return self.invariants.get(tuple(coordinates), default)

    def to_frame(self) -> pd.DataFrame:
        """One row per class, sorted by coordinates."""
        columns = list(settings.table_columns(self.lattice.names))
        rows = [list(coords) + [value] for coords, value in sorted(self.invariants.items())]
        return pd.DataFrame(rows, columns=columns, dtype=object)

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator="\n")

    def to_document(self) -> Dict[str, Any]:
        return {
            "cap": self.cap,
            "basis": {name: list(b.entries) for name, b in zip(self.lattice.names, self.lattice.basis)},
            "convention_ledger": ledger_hash(),
            "fan_fingerprint": fan_fingerprint(self.lattice.fan),
            "invariants": [
                {"class": list(coords), "kernel_vector": list(self.classes[coords].entries),
                 settings.INVARIANT_COLUMN: value}
                for coords, value in sorted(self.invariants.items())
            ],
            "unreachable": [list(c) for c in sorted(self.unreachable)],
        }
