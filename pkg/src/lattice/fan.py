"""
Simplicial fans in N = Z^3.
Validation, smoothness, the Calabi-Yau covector and the height-one polygon.
"""

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, permutations
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from src.lattice import linalg
from src.utils.errors import FanError, NotCalabiYauError

logger = logging.getLogger(__name__)

LatticeVector = Tuple[int, int, int]
Cone3 = Tuple[int, int, int]
Wall = Tuple[int, int]
Point2 = Tuple[int, int]


def primitive(v: Sequence[int]) -> LatticeVector:
    """
    Primitive representative of a nonzero integer vector.

    Args:
        v: integer 3-vector

    Returns:
        v divided by the gcd of its entries

    Raises:
        FanError: If v is the zero vector
    """
    x, y, z = (int(c) for c in v)
    g = gcd(gcd(abs(x), abs(y)), abs(z))
    if g == 0:
        raise FanError("zero vector has no primitive representative")
    return (x // g, y // g, z // g)


def is_primitive(v: Sequence[int]) -> bool:
    """True for nonzero vectors whose entries have gcd 1."""
    return any(v) and gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2])) == 1


@dataclass(frozen=True, eq=False)
class Fan:
    """
    A simplicial fan given by its rays and its maximal cones.

    Cones are stored as sorted index triples; walls are derived on demand.
    Equality ignores the order of the cone list.
    """

    rays: Tuple[LatticeVector, ...]
    cones: Tuple[Cone3, ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(c) for c in r) for r in self.rays))
        object.__setattr__(self, "cones", tuple(tuple(sorted(int(i) for i in c)) for c in self.cones))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fan):
            return NotImplemented
        return self.rays == other.rays and sorted(self.cones) == sorted(other.cones)

    def __hash__(self) -> int:
        return hash((self.rays, tuple(sorted(self.cones))))

    @property
    def ray_matrix(self) -> np.ndarray:
        """3 x n matrix with the rays as columns."""
        return linalg.as_int_matrix(self.rays).T

    @cached_property
    def walls(self) -> Dict[Wall, Tuple[int, ...]]:
        """Every 2-face mapped to the indices of the maximal cones containing it."""
        found: Dict[Wall, List[int]] = {}
        for index, cone in enumerate(self.cones):
            for wall in combinations(cone, 2):
                found.setdefault(wall, []).append(index)
        return {wall: tuple(owners) for wall, owners in sorted(found.items())}

    @property
    def compact_walls(self) -> Tuple[Wall, ...]:
        """Walls shared by two maximal cones."""
        return tuple(w for w, owners in self.walls.items() if len(owners) == 2)

    @property
    def boundary_walls(self) -> Tuple[Wall, ...]:
        """Walls lying in a single maximal cone."""
        return tuple(w for w, owners in self.walls.items() if len(owners) == 1)

    def is_compact_wall(self, wall: Sequence[int]) -> bool:
        return len(self.walls.get(tuple(sorted(wall)), ())) == 2

    def apexes(self, wall: Sequence[int]) -> Tuple[int, ...]:
        """
        Rays opposite to a wall in the cones containing it.

        Args:
            wall: pair of ray indices

        Returns:
            One apex per cone containing the wall, in cone order

        Raises:
            FanError: If the pair is not a wall
        """
        key = tuple(sorted(wall))
        if key not in self.walls:
            raise FanError(f"rays {key} do not span a wall of the fan")
        return tuple(next(i for i in self.cones[c] if i not in key) for c in self.walls[key])

    def cone_index(self, cone: Sequence[int]) -> Optional[int]:
        """Position of a maximal cone in the cone list, or None."""
        key = tuple(sorted(cone))
        try:
            return self.cones.index(key)
        except ValueError:
            return None

    def ray_index(self, ray: Sequence[int]) -> int:
        """
        Index of a ray given by its coordinates.

        Raises:
            FanError: If the ray is not in the fan
        """
        key = tuple(int(c) for c in ray)
        try:
            return self.rays.index(key)
        except ValueError:
            raise FanError(f"ray {key} is not in the fan")

    def cone_det(self, cone: Sequence[int]) -> int:
        """Determinant of the cone's generators (sorted index order)."""
        return linalg.det3([self.rays[i] for i in sorted(cone)])

    def is_smooth_cone(self, cone: Sequence[int]) -> bool:
        return abs(self.cone_det(cone)) == 1

    def cones_containing(self, ray: int) -> Tuple[int, ...]:
        return tuple(k for k, cone in enumerate(self.cones) if ray in cone)

    def neighbors(self, ray: int) -> Tuple[int, ...]:
        """Rays sharing a maximal cone with the given ray, in index order."""
        return tuple(sorted({i for c in self.cones_containing(ray) for i in self.cones[c] if i != ray}))

    def transform(self, matrix) -> "Fan":
        """
        Image of the fan under a unimodular matrix acting on N.

        Args:
            matrix: 3x3 integer matrix of determinant ±1

        Returns:
            Fan with transformed rays and the same cones
        """
        M = linalg.as_int_matrix(matrix)
        rays = [tuple(int(x) for x in M.dot(np.array(r, dtype=object))) for r in self.rays]
        return Fan(tuple(rays), self.cones)


@dataclass(frozen=True)
class ValidationReport:
    """
    Outcome of validate_fan: problems found and per-cone smoothness.
    """

    violations: Tuple[str, ...]
    smooth: Tuple[bool, ...]
    determinants: Tuple[int, ...] = field(default=())

    @property
    def is_valid(self) -> bool:
        return not self.violations

    @property
    def is_smooth(self) -> bool:
        return self.is_valid and all(self.smooth)

    def lines(self) -> List[str]:
        if not self.violations:
            status = "valid smooth fan" if self.is_smooth else "valid fan"
            lines = [status]
        else:
            lines = ["invalid fan"] + [f"  - {v}" for v in self.violations]
        for k, (ok, det) in enumerate(zip(self.smooth, self.determinants)):
            if not ok:
                lines.append(f"  cone {k}: not smooth, |det| = {abs(det)}")
        return lines


def _meet_in_common_face(A: List[LatticeVector], B: List[LatticeVector], C: List[LatticeVector]) -> bool:
    """
    Whether two simplicial cones intersect exactly in the cone on their common rays.

    Looks for a covector vanishing on the common rays, positive on the other
    rays of A and negative on the other rays of B. The closed version of that
    condition cuts out a pointed cone whose extreme rays are cross products
    of generator pairs; the sum of the admissible ones is strictly admissible
    whenever anything is.
    """
    A_only = [a for a in A if a not in C]
    B_only = [b for b in B if b not in C]
    vectors = list(dict.fromkeys(A + B))

    feasible = []
    for x, y in combinations(vectors, 2):
        m = linalg.cross(x, y)
        if m == (0, 0, 0):
            continue
        for cand in (m, tuple(-c for c in m)):
            if (all(linalg.dot(cand, c) == 0 for c in C)
                    and all(linalg.dot(cand, a) >= 0 for a in A_only)
                    and all(linalg.dot(cand, b) <= 0 for b in B_only)):
                feasible.append(cand)

    if not feasible:
        return False
    s = tuple(sum(m[k] for m in feasible) for k in range(3))
    return (all(linalg.dot(s, a) > 0 for a in A_only)
            and all(linalg.dot(s, b) < 0 for b in B_only)
            and all(linalg.dot(s, c) == 0 for c in C))


def validate_fan(fan: Fan) -> ValidationReport:
    """
    Check the fan invariants and report every problem found.

    Args:
        fan: candidate fan

    Returns:
        ValidationReport; no violations means a valid fan
    """
    violations: List[str] = []
    n = len(fan.rays)

    for i, ray in enumerate(fan.rays):
        if len(ray) != 3:
            violations.append(f"ray {i} is not a 3-vector")
        elif not is_primitive(ray):
            violations.append(f"ray {i} {ray} is not primitive")
    seen: Dict[LatticeVector, int] = {}
    for i, ray in enumerate(fan.rays):
        if ray in seen:
            violations.append(f"ray {i} duplicates ray {seen[ray]}")
        seen.setdefault(ray, i)

    good_cones = []
    smooth, dets = [], []
    for k, cone in enumerate(fan.cones):
        if len(set(cone)) != 3 or any(not 0 <= i < n for i in cone):
            violations.append(f"cone {k} {cone} does not name three distinct rays")
            smooth.append(False)
            dets.append(0)
            continue
        det = fan.cone_det(cone)
        dets.append(det)
        smooth.append(abs(det) == 1)
        if det == 0:
            violations.append(f"cone {k} {cone} is degenerate")
        else:
            good_cones.append(k)

    if len(set(fan.cones)) != len(fan.cones):
        violations.append("duplicate maximal cones")

    used = {i for cone in fan.cones for i in cone}
    for i in range(n):
        if i not in used:
            violations.append(f"ray {i} lies in no maximal cone")

    if n and linalg.rank(fan.ray_matrix) < 3:
        violations.append("rays do not span N")

    for wall, owners in fan.walls.items():
        if len(owners) > 2:
            violations.append(f"wall {wall} lies in {len(owners)} cones")

    for k, l in combinations(good_cones, 2):
        ck, cl = fan.cones[k], fan.cones[l]
        if ck == cl:
            continue
        A = [fan.rays[i] for i in ck]
        B = [fan.rays[i] for i in cl]
        C = [fan.rays[i] for i in ck if i in cl]
        if not _meet_in_common_face(A, B, C):
            violations.append(f"cones {ck} and {cl} do not meet in a common face")

    report = ValidationReport(tuple(violations), tuple(smooth), tuple(dets))
    logger.debug("[LATTICE] validated fan with %d rays, %d cones: %d violations",
                 n, len(fan.cones), len(violations))
    return report


@dataclass(frozen=True)
class CYStructure:
    """Covector nu with <nu, v> = 1 on every ray."""

    nu: LatticeVector


def cy_vector(fan: Fan) -> CYStructure:
    """
    The Calabi-Yau covector of a fan.

    Args:
        fan: valid fan whose rays span N

    Returns:
        CYStructure with <nu, v_i> = 1 for every ray

    Raises:
        NotCalabiYauError: If no integral covector pairs to one with all rays
    """
    A = linalg.as_int_matrix(fan.rays)
    nu = linalg.solve_integer(A, [1] * len(fan.rays))
    if nu is None:
        raise NotCalabiYauError("fan is not Calabi-Yau")
    nu = tuple(int(x) for x in nu)
    # Spanning rays make the solution unique; checked exactly anyway.
    if any(linalg.dot(nu, r) != 1 for r in fan.rays):
        raise NotCalabiYauError("fan is not Calabi-Yau")
    return CYStructure(nu)


def is_calabi_yau(fan: Fan) -> bool:
    try:
        cy_vector(fan)
        return True
    except NotCalabiYauError:
        return False


@dataclass(frozen=True)
class HeightOnePolygon:
    """
    Projection of a Calabi-Yau fan to the plane <nu, .> = 1.

    points[i] is the image of ray i; triangles are the cones.
    """

    points: Tuple[Point2, ...]
    triangles: Tuple[Cone3, ...]
    basis: Tuple[LatticeVector, ...]

    def doubled_area(self, triangle: Sequence[int]) -> int:
        """Signed lattice area (twice the Euclidean area) of a triangle."""
        a, b, c = (self.points[i] for i in triangle)
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    def ccw(self, triangle: Sequence[int]) -> Cone3:
        """Triangle vertices in counter-clockwise order."""
        a, b, c = triangle
        return (a, b, c) if self.doubled_area((a, b, c)) > 0 else (a, c, b)

    def lines(self) -> List[str]:
        lines = ["points: " + ", ".join(f"{i}:{p}" for i, p in enumerate(self.points))]
        lines.append("triangles: " + ", ".join(str(t) for t in self.triangles))
        return lines


def height_one_polygon(fan: Fan, cy: CYStructure) -> HeightOnePolygon:
    """
    Planar picture of a Calabi-Yau fan.

    nu is completed to a basis of M; the two extra covectors give the
    coordinates in the plane.

    Args:
        fan: Calabi-Yau fan
        cy: its covector

    Returns:
        HeightOnePolygon with one point per ray and one triangle per cone
    """
    M = linalg.complete_to_basis(cy.nu)
    points = tuple((linalg.dot(M[1], r), linalg.dot(M[2], r)) for r in fan.rays)
    basis = tuple(tuple(int(x) for x in row) for row in M)
    return HeightOnePolygon(points, fan.cones, basis)


def compact_divisor_rays(fan: Fan) -> FrozenSet[int]:
    """
    Rays whose star closes up, i.e. interior points of the height-one polygon.

    Args:
        fan: valid fan

    Returns:
        Set of ray indices all of whose walls are compact
    """
    result = set()
    for i in range(len(fan.rays)):
        walls = [w for w in fan.walls if i in w]
        if walls and all(len(fan.walls[w]) == 2 for w in walls):
            result.add(i)
    return frozenset(result)


def _in_open_half_plane(vectors: Sequence[Point2]) -> bool:
    """Whether some line through the origin has every vector strictly on one side."""
    if any(v == (0, 0) for v in vectors):
        return False
    for first in vectors:
        ok = True
        for v in vectors:
            wedge = first[0] * v[1] - first[1] * v[0]
            if wedge < 0 or (wedge == 0 and first[0] * v[0] + first[1] * v[1] <= 0):
                ok = False
                break
        if ok:
            return True
    return False


def divisor_fan_generators(fan: Fan, ray: int) -> Tuple[Point2, ...]:
    """
    2D fan of a toric divisor: the star of the ray modulo the ray.

    Args:
        fan: valid fan
        ray: ray index

    Returns:
        Images of the neighboring rays in N / Z v_ray, in neighbor order
    """
    B = linalg.complete_to_basis(fan.rays[ray]).T
    Binv = linalg.inverse_unimodular3(B)
    gens = []
    for j in fan.neighbors(ray):
        coords = Binv.dot(np.array(fan.rays[j], dtype=object))
        gens.append((int(coords[1]), int(coords[2])))
    return tuple(gens)


def is_fano_surface(fan: Fan, ray: int) -> bool:
    """
    Whether the compact toric divisor of a ray is a Fano surface.

    Every primitive generator of its 2D fan must be a vertex of the convex
    hull of all generators.

    Args:
        fan: valid smooth fan
        ray: index of a compact divisor ray

    Returns:
        True if the surface is Fano

    Raises:
        FanError: If the divisor is not compact
    """
    if ray not in compact_divisor_rays(fan):
        raise FanError(f"ray {ray} does not give a compact divisor")
    gens = divisor_fan_generators(fan, ray)
    for p in gens:
        others = [(q[0] - p[0], q[1] - p[1]) for q in gens if q != p]
        if not _in_open_half_plane(others):
            return False
    return True


def normal_form(fan: Fan) -> Tuple[Tuple[LatticeVector, ...], Tuple[Cone3, ...]]:
    """
    Canonical form under GL(3,Z) and relabeling of rays.

    Every ordered smooth cone is sent to the standard basis; the smallest
    resulting (sorted rays, sorted cones) pair is the normal form.

    Args:
        fan: fan with at least one smooth cone

    Returns:
        (rays, cones) in canonical form

    Raises:
        FanError: If no cone is smooth
    """
    best = None
    for cone in fan.cones:
        if not fan.is_smooth_cone(cone):
            continue
        for order in permutations(cone):
            B = linalg.as_int_matrix([fan.rays[i] for i in order]).T
            Binv = linalg.inverse_unimodular3(B)
            images = [tuple(int(x) for x in Binv.dot(np.array(r, dtype=object))) for r in fan.rays]
            ranking = sorted(range(len(images)), key=lambda i: images[i])
            position = {old: new for new, old in enumerate(ranking)}
            rays = tuple(images[i] for i in ranking)
            cones = tuple(sorted(tuple(sorted(position[i] for i in c)) for c in fan.cones))
            key = (rays, cones)
            if best is None or key < best:
                best = key
    if best is None:
        raise FanError("normal form needs a smooth cone")
    return best


def fans_equivalent(first: Fan, second: Fan) -> bool:
    """Whether two fans agree up to GL(3,Z) and relabeling of rays."""
    if len(first.rays) != len(second.rays) or len(first.cones) != len(second.cones):
        return False
    return normal_form(first) == normal_form(second)


def random_unimodular(rng: random.Random, steps: int = 6) -> np.ndarray:
    """
    Random element of GL(3,Z) built from elementary operations.

    Args:
        rng: seeded random generator
        steps: number of elementary row operations

    Returns:
        3x3 integer matrix of determinant ±1
    """
    M = np.eye(3, dtype=object)
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        M[i] = M[i] + rng.choice([-2, -1, 1, 2]) * M[j]
    order = list(range(3))
    rng.shuffle(order)
    M = M[order]
    if rng.random() < 0.5:
        M[0] = -M[0]
    return M
