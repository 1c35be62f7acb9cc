"""
Topological-vertex engine: webs, partition functions, free energies,
Gopakumar-Vafa tables and open invariants.
"""

from .conventions import LEDGER, ledger_hash
from .web import Web, WebEdge, WebLeg, WebVertex, build_web
from .amplitudes import edge_factor, vertex_amplitude
from .partition_function import PartitionFunction, partition_function, positive_grading, required_cap
from .free_energy import FreeEnergy, free_energy
from .tables import GVTable, fan_fingerprint
from .gv import extract_gv, gw_table
from .open_invariants import (
    ALL_FIXED_POINTS,
    FixedPointResult,
    OpenInvariantQuery,
    OpenInvariantResult,
    open_gw,
    open_gw_values,
)

__all__ = [
    "ALL_FIXED_POINTS",
    "FixedPointResult",
    "FreeEnergy",
    "GVTable",
    "LEDGER",
    "OpenInvariantQuery",
    "OpenInvariantResult",
    "PartitionFunction",
    "Web",
    "WebEdge",
    "WebLeg",
    "WebVertex",
    "build_web",
    "edge_factor",
    "extract_gv",
    "fan_fingerprint",
    "free_energy",
    "gw_table",
    "ledger_hash",
    "open_gw",
    "open_gw_values",
    "partition_function",
    "positive_grading",
    "required_cap",
    "vertex_amplitude",
]
