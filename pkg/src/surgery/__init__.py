"""
Surgery package: fan rewrites, their records and the open-invariant construction.
"""

from .steps import Blowup, Compactify, Flop, RemoveRay, StepKind, SurgeryStep, SurgeryTrace
from .operations import (
    apply_step,
    blowup_fixed_point,
    compactify,
    flop,
    remove_ray,
    replay,
    undo,
    wall_relation,
)
from .pipeline import enumerate_fixed_points, open_invariant_surgery

__all__ = [
    "Blowup",
    "Compactify",
    "Flop",
    "RemoveRay",
    "StepKind",
    "SurgeryStep",
    "SurgeryTrace",
    "apply_step",
    "blowup_fixed_point",
    "compactify",
    "enumerate_fixed_points",
    "flop",
    "open_invariant_surgery",
    "remove_ray",
    "replay",
    "undo",
    "wall_relation",
]
