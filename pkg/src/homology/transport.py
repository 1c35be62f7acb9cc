"""
Moving curve classes through surgery steps.
"""

import logging
from typing import List, Tuple

from src.homology.classes import CurveClass, wall_class
from src.lattice.fan import Fan
from src.surgery.steps import Blowup, Compactify, Flop, RemoveRay, SurgeryStep, SurgeryTrace
from src.utils.errors import ClassTransportError

logger = logging.getLogger(__name__)


def compactify_transport(step: Compactify, cls: CurveClass) -> CurveClass:
    """Extension by zero at v_inf."""
    return CurveClass(cls.entries + (0,))


def blowup_transport(step: Blowup, cls: CurveClass) -> CurveClass:
    """Total transform: entry 0 at the exceptional ray."""
    if len(cls) != step.new_ray:
        raise ClassTransportError(f"class has {len(cls)} entries, expected {step.new_ray}")
    return CurveClass(cls.entries + (0,))


def exceptional_line(fan1: Fan, step: Blowup) -> CurveClass:
    """
    Line class in the exceptional divisor of a point blowup.

    Computed from each wall <w, c_i> and checked to agree: +1 at the three
    generators of the subdivided cone, -1 at w.
    """
    w = step.new_ray
    classes = {wall_class(fan1, (w, c)) for c in step.cone}
    if len(classes) != 1:
        raise ClassTransportError("exceptional wall classes disagree")
    return classes.pop()


def strict_transform(alpha: CurveClass, step: Blowup, fan1: Fan) -> CurveClass:
    """pi^! alpha - e for a class through the blown-up point."""
    return blowup_transport(step, alpha) - exceptional_line(fan1, step)


def flop_transport(step: Flop, cls: CurveClass) -> CurveClass:
    """Rays are unchanged by a flop, so classes are too."""
    return CurveClass(cls.entries)


def remove_ray_transport(step: RemoveRay, cls: CurveClass) -> CurveClass:
    """
    Descent to the fan without the removed ray.

    Raises:
        ClassTransportError: If the class meets the removed divisor
    """
    if cls[step.ray] != 0:
        raise ClassTransportError(
            f"class {list(cls.entries)} has entry {cls[step.ray]} at the removed ray {step.ray}; "
            f"only classes disjoint from it descend")
    return CurveClass(cls.entries[:step.ray] + cls.entries[step.ray + 1:])


def transport_step(step: SurgeryStep, cls: CurveClass, fan_after: Fan, strict: bool = False) -> CurveClass:
    """One step of transport; strict subtracts the exceptional line at blowups."""
    if isinstance(step, Compactify):
        return compactify_transport(step, cls)
    if isinstance(step, Blowup):
        if strict:
            return strict_transform(cls, step, fan_after)
        return blowup_transport(step, cls)
    if isinstance(step, Flop):
        return flop_transport(step, cls)
    if isinstance(step, RemoveRay):
        return remove_ray_transport(step, cls)
    raise ClassTransportError(f"unknown surgery step {step!r}")


def transport(trace: SurgeryTrace, cls: CurveClass, strict: bool = False) -> Tuple[CurveClass, List[CurveClass]]:
    """
    Carry a class through every step of a trace.

    Args:
        trace: surgery trace
        cls: class on the initial fan
        strict: take strict transforms at blowups

    Returns:
        (final class, class after each step)
    """
    history = []
    for step, fan in zip(trace.steps, trace.fans):
        cls = transport_step(step, cls, fan, strict).checked(fan)
        history.append(cls)
    return cls, history
