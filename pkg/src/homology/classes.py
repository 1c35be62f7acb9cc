"""
Curve classes of a toric threefold as integer relations among its rays.
Entry i of a class is its intersection number with the divisor of ray i.
"""

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, Mapping, Optional, Sequence, Tuple

from src.lattice import linalg
from src.lattice.fan import Fan, Wall
from src.utils.errors import ClassTransportError, FanError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveClass:
    """Integer vector indexed by the rays of a fan."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __add__(self, other: "CurveClass") -> "CurveClass":
        self._check_length(other)
        return CurveClass(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "CurveClass") -> "CurveClass":
        self._check_length(other)
        return CurveClass(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "CurveClass":
        return CurveClass(tuple(-a for a in self.entries))

    def __mul__(self, k: int) -> "CurveClass":
        return CurveClass(tuple(k * a for a in self.entries))

    __rmul__ = __mul__

    def _check_length(self, other: "CurveClass"):
        if len(other) != len(self):
            raise ClassTransportError(f"classes live on different fans ({len(self)} vs {len(other)} rays)")

    def is_zero(self) -> bool:
        return not any(self.entries)

    def content(self) -> int:
        """gcd of the entries (0 for the zero class)."""
        g = 0
        for a in self.entries:
            g = gcd(g, a)
        return g

    def divided(self, k: int) -> "CurveClass":
        if any(a % k for a in self.entries):
            raise ClassTransportError(f"class {self.entries} is not divisible by {k}")
        return CurveClass(tuple(a // k for a in self.entries))

    def satisfies_kernel_condition(self, fan: Fan) -> bool:
        if len(self) != len(fan.rays):
            return False
        return all(sum(d * r[k] for d, r in zip(self.entries, fan.rays)) == 0 for k in range(3))

    def checked(self, fan: Fan) -> "CurveClass":
        """
        Raises:
            ClassTransportError: If sum d_i v_i != 0
        """
        if not self.satisfies_kernel_condition(fan):
            raise ClassTransportError(f"{list(self.entries)} is not a curve class of the fan")
        return self


@dataclass(frozen=True)
class ClassLattice:
    """
    Kernel lattice of a fan with a chosen basis and the classes of its compact walls.
    """

    fan: Fan
    basis: Tuple[CurveClass, ...]
    names: Tuple[str, ...] = ()
    compact_wall_classes: Dict[Wall, CurveClass] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def expand(self, coordinates: Sequence[int]) -> CurveClass:
        """Linear combination of the basis."""
        if len(coordinates) != self.rank:
            raise ClassTransportError(f"expected {self.rank} coordinates, got {len(coordinates)}")
        total = CurveClass((0,) * len(self.fan.rays))
        for c, b in zip(coordinates, self.basis):
            total = total + b * int(c)
        return total


def _normalize_sign(v: Sequence[int]) -> Tuple[int, ...]:
    first = next((x for x in v if x), 0)
    return tuple(-x for x in v) if first < 0 else tuple(int(x) for x in v)


def kernel_basis(fan: Fan) -> ClassLattice:
    """
    Integral basis of {d : sum d_i v_i = 0}, in Hermite normal form up to the
    sign of each row.

    Args:
        fan: valid fan whose rays span N

    Returns:
        ClassLattice with the basis and the wall classes

    Raises:
        FanError: If the rays do not span N
    """
    A = fan.ray_matrix
    if linalg.rank(A) < 3:
        raise FanError("rays do not span N")
    K = linalg.kernel(A)
    if K.shape[1] == 0:
        basis: Tuple[CurveClass, ...] = ()
    else:
        H = linalg.hermite_rows(K.T)
        basis = tuple(CurveClass(_normalize_sign(row)) for row in H)
    walls = {w: wall_class(fan, w) for w in fan.compact_walls}
    names = tuple(f"b{i}" for i in range(len(basis)))
    coords = [_coordinates(ClassLattice(fan, basis, names), c) for c in walls.values()]
    # flip rows in which every wall class has a nonpositive coordinate
    basis = tuple(
        -b if coords and max(c[i] for c in coords) <= 0 and min(c[i] for c in coords) < 0 else b
        for i, b in enumerate(basis))
    logger.debug("[HOMOLOGY] class lattice of rank %d", len(basis))
    return ClassLattice(fan, basis, names, walls)


def named_basis(fan: Fan, named: Mapping[str, Sequence[int]]) -> ClassLattice:
    """
    Class lattice with user-designated basis classes.

    Raises:
        ClassTransportError: If a class violates the kernel condition or the
            classes are not a lattice basis
    """
    full = kernel_basis(fan)
    basis = tuple(CurveClass(v).checked(fan) for v in named.values())
    lattice = ClassLattice(fan, basis, tuple(named), full.compact_wall_classes)
    if len(basis) != full.rank:
        raise ClassTransportError(
            f"{len(basis)} named classes cannot be a basis of a rank {full.rank} class lattice")
    for b in full.basis:
        if _coordinates(lattice, b) is None:
            raise ClassTransportError("named classes do not span the class lattice")
    return lattice


def wall_class(fan: Fan, wall: Sequence[int]) -> CurveClass:
    """
    Class of the torus-invariant curve of a compact wall.

    +1 at the two apexes, the solved coefficients at the wall rays, 0 elsewhere.

    Raises:
        FanError: If the wall is not compact
    """
    key = tuple(sorted(wall))
    if not fan.is_compact_wall(key):
        raise FanError(f"wall {key} is not compact")
    a, b = fan.apexes(key)
    target = [-(fan.rays[a][k] + fan.rays[b][k]) for k in range(3)]
    columns = linalg.as_int_matrix([fan.rays[key[0]], fan.rays[key[1]]]).T
    solution = linalg.solve_integer(columns, target)
    if solution is None:
        raise FanError(f"wall {key} has no integral relation")
    entries = [0] * len(fan.rays)
    entries[a] += 1
    entries[b] += 1
    entries[key[0]] += int(solution[0])
    entries[key[1]] += int(solution[1])
    return CurveClass(tuple(entries))


def fiber_class(fan: Fan, i0: int, i_inf: int) -> CurveClass:
    """
    Class h of the fiber through D_0 and D_inf.

    Raises:
        FanError: If the two rays are not opposite
    """
    if any(a != -b for a, b in zip(fan.rays[i0], fan.rays[i_inf])):
        raise FanError(f"rays {i0} and {i_inf} are not opposite")
    entries = [0] * len(fan.rays)
    entries[i0] = 1
    entries[i_inf] = 1
    return CurveClass(tuple(entries))


def _coordinates(lattice: ClassLattice, cls: CurveClass) -> Optional[Tuple[int, ...]]:
    if not lattice.basis:
        return () if cls.is_zero() else None
    B = linalg.as_int_matrix([b.entries for b in lattice.basis]).T
    solution = linalg.solve_integer(B, cls.entries)
    if solution is None:
        return None
    return tuple(int(x) for x in solution)


def class_in_basis(lattice: ClassLattice, cls: CurveClass) -> Tuple[int, ...]:
    """
    Integer coordinates of a class in the lattice basis.

    Raises:
        ClassTransportError: If the class is not an integral combination of the basis
    """
    cls.checked(lattice.fan)
    coords = _coordinates(lattice, cls)
    if coords is None:
        raise ClassTransportError(f"class {list(cls.entries)} is not integral in the basis")
    return coords
