"""
The open-invariant construction: compactify, blow up a fixed point on the
divisor at infinity, flop, and remove the ray at infinity again.
"""

import logging
from typing import Sequence, Tuple

from src.lattice.fan import Fan, Wall, compact_divisor_rays, cy_vector
from src.surgery.operations import blowup_fixed_point, check_smooth, compactify, flop, remove_ray, wall_relation
from src.surgery.steps import SurgeryTrace
from src.utils.errors import SurgeryError

logger = logging.getLogger(__name__)

TOTAL_STEPS = 4


def enumerate_fixed_points(fan0: Fan, d0: int) -> Tuple[Wall, ...]:
    """
    Torus-fixed points on D_inf after compactifying along d0.

    Each is named by the boundary wall <u1,u2> of fan0; the fixed point is
    the cone <v_inf, u1, u2> of the compactified fan.

    Raises:
        SurgeryError: If d0 is not a compact divisor ray
    """
    if d0 not in compact_divisor_rays(fan0):
        raise SurgeryError(f"ray {d0} is not a compact divisor ray")
    return fan0.boundary_walls


def _boundary_rays(fan: Fan) -> frozenset:
    return frozenset(i for wall in fan.boundary_walls for i in wall)


def open_invariant_surgery(fan0: Fan, d0: int, fixed_point: Sequence[int]) -> Tuple[Fan, SurgeryTrace]:
    """
    Build W_0 from fan0, a compact divisor ray and a fixed point on D_inf.

    Args:
        fan0: valid smooth Calabi-Yau fan
        d0: compact divisor ray
        fixed_point: boundary wall <u1,u2> of fan0

    Returns:
        (W_0, trace of the four steps)

    Raises:
        SurgeryError: If a step fails; in particular when the wall <u1,u2>
            is not a simple flop wall after the blowup
    """
    check_smooth(fan0)
    cy_vector(fan0)
    wall = tuple(sorted(fixed_point))
    if wall not in enumerate_fixed_points(fan0, d0):
        raise SurgeryError(f"{wall} is not a boundary wall of the fan, so it names no fixed point on D_inf")

    trace = SurgeryTrace(fan0)

    logger.info("[PIPELINE] STEP 1/%d: compactify along ray %d", TOTAL_STEPS, d0)
    fan_c, step = compactify(fan0, d0)
    trace = trace.extended(step, fan_c)
    v_inf = step.new_ray

    logger.info("[PIPELINE] STEP 2/%d: blow up fixed point <v_inf, %d, %d>", TOTAL_STEPS, *wall)
    fan_b, step = blowup_fixed_point(fan_c, wall + (v_inf,))
    trace = trace.extended(step, fan_b)

    logger.info("[PIPELINE] STEP 3/%d: flop wall <%d, %d>", TOTAL_STEPS, *wall)
    relation = wall_relation(fan_b, wall)
    if relation != (-1, -1):
        raise SurgeryError(
            f"chosen fixed point does not yield a simple flop: wall {wall} has relation "
            f"coefficients {relation}; try another fixed point")
    fan_f, step = flop(fan_b, wall)
    trace = trace.extended(step, fan_f)

    logger.info("[PIPELINE] STEP 4/%d: remove v_inf (ray %d)", TOTAL_STEPS, v_inf)
    w0, step = remove_ray(fan_f, v_inf)
    trace = trace.extended(step, w0)

    _check_properties(fan0, w0)
    return w0, trace


def _check_properties(fan0: Fan, w0: Fan) -> None:
    """W_0 is smooth CY; interior points unchanged; the boundary gains exactly w."""
    check_smooth(w0)
    cy_vector(w0)
    w = len(fan0.rays)
    if len(compact_divisor_rays(w0)) != len(compact_divisor_rays(fan0)):
        raise SurgeryError("construction changed the number of compact divisors")
    if _boundary_rays(w0) != _boundary_rays(fan0) | {w}:
        raise SurgeryError("construction changed the boundary beyond the new ray")
    logger.info("[PIPELINE] W_0 has %d rays, %d cones", len(w0.rays), len(w0.cones))
