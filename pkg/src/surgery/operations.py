"""
Fan rewrites: fiberwise compactification, blowup at a torus-fixed point,
simple flop and ray removal, with their inverses and trace replay.
"""

import logging
from typing import List, Sequence, Tuple

from src.lattice import linalg
from src.lattice.fan import Cone3, Fan, compact_divisor_rays, validate_fan
from src.surgery.steps import Blowup, Compactify, Flop, RemoveRay, SurgeryStep, SurgeryTrace
from src.utils.errors import FanError, SurgeryError

logger = logging.getLogger(__name__)


def compactify(fan: Fan, i0: int) -> Tuple[Fan, Compactify]:
    """
    Add v_inf = -v_i0 and cone every boundary wall to it.

    Args:
        fan: valid smooth Calabi-Yau fan
        i0: compact divisor ray

    Returns:
        (complete fan, step record)

    Raises:
        SurgeryError: If i0 is not a compact divisor ray or a new cone is
            not smooth or breaks the fan axiom
    """
    if i0 not in compact_divisor_rays(fan):
        raise SurgeryError(f"ray {i0} is not a compact divisor ray")
    vector = tuple(-c for c in fan.rays[i0])
    if vector in fan.rays:
        raise SurgeryError(f"compactification failed: ray {vector} already present")

    new_ray = len(fan.rays)
    added = tuple((a, b, new_ray) for a, b in fan.boundary_walls)
    result = Fan(fan.rays + (vector,), fan.cones + added)
    for cone in added:
        if not result.is_smooth_cone(cone):
            raise SurgeryError(f"compactification failed: cone {cone} is not smooth "
                               f"(|det| = {abs(result.cone_det(cone))})")
    report = validate_fan(result)
    if not report.is_valid:
        raise SurgeryError(f"compactification failed: {report.violations[0]}")

    logger.info("[SURGERY] compactified along ray %d: v_inf = %s, %d new cones", i0, vector, len(added))
    return result, Compactify(i0, new_ray, vector, added)


def blowup_fixed_point(fan: Fan, cone: Sequence[int]) -> Tuple[Fan, Blowup]:
    """
    Star subdivision of a smooth maximal cone at the sum of its generators.

    The three new cones take the place of the subdivided one in the cone list.

    Args:
        fan: fan containing the cone
        cone: ray indices of a maximal cone

    Returns:
        (blown-up fan, step record)

    Raises:
        SurgeryError: If the cone is not maximal in the fan or not smooth
    """
    key = tuple(sorted(cone))
    position = fan.cone_index(key)
    if position is None:
        raise SurgeryError(f"cone {key} is not a maximal cone of the fan")
    if not fan.is_smooth_cone(key):
        raise SurgeryError(f"cone {key} is not smooth")

    vector = tuple(sum(fan.rays[i][k] for i in key) for k in range(3))
    new_ray = len(fan.rays)
    a, b, c = key
    cones = list(fan.cones)
    cones[position:position + 1] = [(a, b, new_ray), (a, c, new_ray), (b, c, new_ray)]
    result = Fan(fan.rays + (vector,), tuple(cones))

    logger.info("[SURGERY] blew up cone %s: new ray %d = %s", key, new_ray, vector)
    return result, Blowup(key, position, new_ray, vector)


def wall_relation(fan: Fan, wall: Sequence[int]) -> Tuple[int, int]:
    """
    Coefficients (c1, c2) with v_a + v_b + c1 v_u1 + c2 v_u2 = 0 for a compact wall.

    Raises:
        SurgeryError: If the wall is not compact or has no integral relation
    """
    key = tuple(sorted(wall))
    if not fan.is_compact_wall(key):
        raise SurgeryError(f"wall {key} is not compact")
    a, b = fan.apexes(key)
    target = [-(fan.rays[a][k] + fan.rays[b][k]) for k in range(3)]
    columns = linalg.as_int_matrix([fan.rays[key[0]], fan.rays[key[1]]]).T
    solution = linalg.solve_integer(columns, target)
    if solution is None:
        raise SurgeryError(f"wall {key} has no integral relation")
    return int(solution[0]), int(solution[1])


def flop(fan: Fan, wall: Sequence[int]) -> Tuple[Fan, Flop]:
    """
    Exchange the diagonal of the unit quadrilateral around a (-1,-1) wall.

    Cones <w,u1,u2>, <u0,u1,u2> become <w,u0,u1>, <w,u0,u2> at the same positions.

    Args:
        fan: valid fan
        wall: compact wall <u1,u2>

    Returns:
        (flopped fan, step record)

    Raises:
        SurgeryError: If the wall is not compact or u0 + w != u1 + u2
    """
    key = tuple(sorted(wall))
    if not fan.is_compact_wall(key):
        raise SurgeryError(f"wall {key} is not compact")
    c1, c2 = wall_relation(fan, key)
    if (c1, c2) != (-1, -1):
        raise SurgeryError(f"wall is not a simple (−1,−1) flop wall: relation coefficients ({c1}, {c2})")

    positions = fan.walls[key]
    a, b = fan.apexes(key)
    cones = list(fan.cones)
    cones[positions[0]] = (a, b, key[0])
    cones[positions[1]] = (a, b, key[1])
    result = Fan(fan.rays, tuple(cones))
    flopped = tuple(sorted((a, b)))

    logger.info("[SURGERY] flopped wall %s -> %s", key, flopped)
    return result, Flop(key, flopped, (positions[0], positions[1]))


def remove_ray(fan: Fan, i: int) -> Tuple[Fan, RemoveRay]:
    """
    Delete a ray with every cone containing it, keeping the order of the rest.

    Args:
        fan: valid fan
        i: ray index

    Returns:
        (smaller fan, step record)

    Raises:
        SurgeryError: If the result is not a valid fan
    """
    if not 0 <= i < len(fan.rays):
        raise SurgeryError(f"ray {i} is not in the fan")
    removed = tuple((p, c) for p, c in enumerate(fan.cones) if i in c)
    kept = [c for c in fan.cones if i not in c]

    def relabel(j: int) -> int:
        return j if j < i else j - 1

    rays = fan.rays[:i] + fan.rays[i + 1:]
    result = Fan(rays, tuple(tuple(relabel(j) for j in c) for c in kept))

    report = validate_fan(result)
    if not report.is_valid:
        raise SurgeryError(f"removing ray {i} leaves an invalid fan: {'; '.join(report.violations)}")

    logger.info("[SURGERY] removed ray %d = %s with %d cones", i, fan.rays[i], len(removed))
    return result, RemoveRay(i, fan.rays[i], removed)


def _blowdown(fan: Fan, step: Blowup) -> Fan:
    w = step.new_ray
    if w != len(fan.rays) - 1:
        raise SurgeryError("blowdown expects the exceptional ray last")
    cones = [c for c in fan.cones if w not in c]
    cones.insert(step.position, step.cone)
    return Fan(fan.rays[:w], tuple(cones))


def _reinsert(fan: Fan, step: RemoveRay) -> Fan:
    i = step.ray

    def relabel(j: int) -> int:
        return j if j < i else j + 1

    cones: List[Cone3] = [tuple(relabel(j) for j in c) for c in fan.cones]
    for position, cone in step.removed_cones:
        cones.insert(position, cone)
    return Fan(fan.rays[:i] + (step.vector,) + fan.rays[i:], tuple(cones))


def undo(fan: Fan, step: SurgeryStep) -> Fan:
    """
    Invert a step on the fan it produced.

    Args:
        fan: the fan after the step
        step: the step record

    Returns:
        The fan before the step
    """
    if isinstance(step, Compactify):
        return remove_ray(fan, step.new_ray)[0]
    if isinstance(step, Blowup):
        return _blowdown(fan, step)
    if isinstance(step, Flop):
        return flop(fan, step.flopped_wall)[0]
    if isinstance(step, RemoveRay):
        return _reinsert(fan, step)
    raise SurgeryError(f"unknown surgery step {step!r}")


def apply_step(fan: Fan, step: SurgeryStep) -> Fan:
    """Re-run a recorded step on a fan."""
    if isinstance(step, Compactify):
        return compactify(fan, step.source_ray)[0]
    if isinstance(step, Blowup):
        return blowup_fixed_point(fan, step.cone)[0]
    if isinstance(step, Flop):
        return flop(fan, step.wall)[0]
    if isinstance(step, RemoveRay):
        return remove_ray(fan, step.ray)[0]
    raise SurgeryError(f"unknown surgery step {step!r}")


def replay(trace: SurgeryTrace) -> Fan:
    """
    Rebuild the final fan of a trace from its initial fan.

    Raises:
        SurgeryError: If any intermediate fan differs from the recorded one
    """
    fan = trace.initial_fan
    for k, (step, recorded) in enumerate(zip(trace.steps, trace.fans)):
        fan = apply_step(fan, step)
        if fan.rays != recorded.rays or fan.cones != recorded.cones:
            raise SurgeryError(f"replay diverged at step {k} ({step.kind.value})")
    return fan


def check_smooth(fan: Fan) -> None:
    """Raise FanError unless the fan is valid and smooth."""
    report = validate_fan(fan)
    if not report.is_smooth:
        raise FanError("; ".join(report.lines()))
