"""
Records of fan surgery steps and the trace of a whole construction.
Each record holds enough data to replay or undo its step.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from src.lattice.fan import Cone3, Fan, LatticeVector, Wall


class StepKind(str, Enum):
    COMPACTIFY = "compactify"
    BLOWUP = "blowup"
    FLOP = "flop"
    REMOVE_RAY = "remove_ray"


def fan_document(fan: Fan) -> Dict[str, Any]:
    return {"rays": [list(r) for r in fan.rays], "cones": [list(c) for c in fan.cones]}


@dataclass(frozen=True)
class SurgeryStep:
    """Common interface of the step records; indices refer to the fan before the step."""

    @property
    def kind(self) -> StepKind:
        raise NotImplementedError

    def ray_map(self, ray_count: int) -> Tuple[Optional[int], ...]:
        """Old ray index -> new ray index (None when the ray is removed)."""
        return tuple(range(ray_count))

    def details(self) -> Dict[str, Any]:
        raise NotImplementedError


@dataclass(frozen=True)
class Compactify(SurgeryStep):
    source_ray: int
    new_ray: int
    vector: LatticeVector
    added_cones: Tuple[Cone3, ...]

    @property
    def kind(self) -> StepKind:
        return StepKind.COMPACTIFY

    def details(self) -> Dict[str, Any]:
        return {
            "source_ray": self.source_ray,
            "new_ray": self.new_ray,
            "vector": list(self.vector),
            "added_cones": [list(c) for c in self.added_cones],
        }


@dataclass(frozen=True)
class Blowup(SurgeryStep):
    cone: Cone3
    position: int
    new_ray: int
    vector: LatticeVector

    @property
    def kind(self) -> StepKind:
        return StepKind.BLOWUP

    def details(self) -> Dict[str, Any]:
        return {
            "cone": list(self.cone),
            "position": self.position,
            "new_ray": self.new_ray,
            "vector": list(self.vector),
        }


@dataclass(frozen=True)
class Flop(SurgeryStep):
    wall: Wall
    flopped_wall: Wall
    positions: Tuple[int, int]

    @property
    def kind(self) -> StepKind:
        return StepKind.FLOP

    def details(self) -> Dict[str, Any]:
        return {
            "wall": list(self.wall),
            "flopped_wall": list(self.flopped_wall),
            "positions": list(self.positions),
        }


@dataclass(frozen=True)
class RemoveRay(SurgeryStep):
    ray: int
    vector: LatticeVector
    removed_cones: Tuple[Tuple[int, Cone3], ...]

    @property
    def kind(self) -> StepKind:
        return StepKind.REMOVE_RAY

    def ray_map(self, ray_count: int) -> Tuple[Optional[int], ...]:
        return tuple(None if i == self.ray else (i if i < self.ray else i - 1) for i in range(ray_count))

    def details(self) -> Dict[str, Any]:
        return {
            "ray": self.ray,
            "vector": list(self.vector),
            "removed_cones": [{"position": p, "cone": list(c)} for p, c in self.removed_cones],
        }


@dataclass(frozen=True)
class SurgeryTrace:
    """
    Ordered record of a construction: the fan after every step is kept.
    """

    initial_fan: Fan
    steps: Tuple[SurgeryStep, ...] = ()
    fans: Tuple[Fan, ...] = ()

    @property
    def final_fan(self) -> Fan:
        return self.fans[-1] if self.fans else self.initial_fan

    @property
    def ray_correspondence(self) -> Tuple[Tuple[Optional[int], ...], ...]:
        maps = []
        before = self.initial_fan
        for step, after in zip(self.steps, self.fans):
            maps.append(step.ray_map(len(before.rays)))
            before = after
        return tuple(maps)

    def extended(self, step: SurgeryStep, fan: Fan) -> "SurgeryTrace":
        return SurgeryTrace(self.initial_fan, self.steps + (step,), self.fans + (fan,))

    def fan_before(self, index: int) -> Fan:
        return self.initial_fan if index == 0 else self.fans[index - 1]

    def to_document(self, classes: Optional[List[Dict[str, Any]]] = None) -> Dict[str, Any]:
        """
        Audit document: every step with its ray coordinates and the fan it produced.

        Args:
            classes: optional per-step transported classes, parallel to the steps
        """
        steps = []
        for k, (step, fan) in enumerate(zip(self.steps, self.fans)):
            entry = {"kind": step.kind.value, **step.details(), "fan": fan_document(fan)}
            if classes is not None and k < len(classes):
                entry["classes"] = classes[k]
            steps.append(entry)
        return {
            "initial_fan": fan_document(self.initial_fan),
            "steps": steps,
            "final_fan": fan_document(self.final_fan),
        }
