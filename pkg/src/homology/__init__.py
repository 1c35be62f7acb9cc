"""
Curve classes, class lattices and class transport through surgery.
"""

from .classes import ClassLattice, CurveClass, class_in_basis, fiber_class, kernel_basis, named_basis, wall_class
from .transport import (
    blowup_transport,
    compactify_transport,
    exceptional_line,
    flop_transport,
    remove_ray_transport,
    strict_transform,
    transport,
    transport_step,
)

__all__ = [
    "ClassLattice",
    "CurveClass",
    "blowup_transport",
    "class_in_basis",
    "compactify_transport",
    "exceptional_line",
    "fiber_class",
    "flop_transport",
    "kernel_basis",
    "named_basis",
    "remove_ray_transport",
    "strict_transform",
    "transport",
    "transport_step",
    "wall_class",
]
