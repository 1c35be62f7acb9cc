"""
The trivalent web dual to the height-one triangulation of a smooth
Calabi-Yau fan: one vertex per cone, one internal edge per compact wall,
one external leg per boundary wall.
"""

import logging
from dataclasses import dataclass
from typing import Collection, Dict, List, Mapping, Optional, Tuple

from src.homology.classes import CurveClass, wall_class
from src.lattice.fan import Fan, HeightOnePolygon, Point2, Wall, cy_vector, height_one_polygon
from src.utils.errors import FanError

logger = logging.getLogger(__name__)


def _outward(p: Point2, q: Point2) -> Point2:
    """Outward normal of the side p -> q of a counter-clockwise triangle."""
    dx, dy = q[0] - p[0], q[1] - p[1]
    return (dy, -dx)


def wedge(u: Point2, v: Point2) -> int:
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class WebVertex:
    """A cone of the fan with its three walls in counter-clockwise slot order."""

    cone: int
    slots: Tuple[Wall, Wall, Wall]
    directions: Tuple[Point2, Point2, Point2]

    def slot_of(self, wall: Wall) -> int:
        return self.slots.index(wall)

    def is_balanced(self) -> bool:
        return all(sum(d[k] for d in self.directions) == 0 for k in range(2))


@dataclass(frozen=True)
class WebEdge:
    """
    Internal edge of the web.

    The source vertex carries the edge partition, the target its conjugate.
    """

    wall: Wall
    source: int
    target: int
    source_slot: int
    target_slot: int
    direction: Point2
    framing: int
    curve_class: CurveClass


@dataclass(frozen=True)
class WebLeg:
    wall: Wall
    vertex: int
    slot: int
    direction: Point2


@dataclass(frozen=True)
class Web:
    fan: Fan
    vertices: Tuple[WebVertex, ...]
    edges: Tuple[WebEdge, ...]
    legs: Tuple[WebLeg, ...]

    @property
    def edge_classes(self) -> Tuple[CurveClass, ...]:
        return tuple(e.curve_class for e in self.edges)

    def incident(self, vertex: int) -> List[Tuple[int, int, bool]]:
        """(slot, edge index, is_source) for every internal edge at a vertex."""
        result = []
        for k, e in enumerate(self.edges):
            if e.source == vertex:
                result.append((e.source_slot, k, True))
            if e.target == vertex:
                result.append((e.target_slot, k, False))
        return sorted(result)

    def lines(self) -> List[str]:
        out = []
        for i, v in enumerate(self.vertices):
            slots = ", ".join(f"{list(w)}->{d}" for w, d in zip(v.slots, v.directions))
            out.append(f"vertex {i} (cone {v.cone}): {slots}")
        for e in self.edges:
            out.append(f"edge {list(e.wall)}: {e.source}->{e.target} direction {e.direction} "
                       f"framing {e.framing} class {list(e.curve_class.entries)}")
        for leg in self.legs:
            out.append(f"leg {list(leg.wall)} at vertex {leg.vertex} direction {leg.direction}")
        return out


def _vertex(polygon: HeightOnePolygon, index: int, rotation: int) -> WebVertex:
    a, b, c = polygon.ccw(polygon.triangles[index])
    points = polygon.points
    sides = ((a, b), (b, c), (c, a))
    walls = [tuple(sorted(s)) for s in sides]
    directions = [_outward(points[p], points[q]) for p, q in sides]
    start = (walls.index(min(walls)) + rotation) % 3
    walls = walls[start:] + walls[:start]
    directions = directions[start:] + directions[:start]
    return WebVertex(index, tuple(walls), tuple(directions))


def build_web(fan: Fan, reverse: Collection[Wall] = (), rotate: Optional[Mapping[int, int]] = None) -> Web:
    """
    Dual web of a smooth Calabi-Yau fan.

    Args:
        fan: valid smooth Calabi-Yau fan
        reverse: compact walls whose edge orientation is flipped
        rotate: vertex index -> number of slot positions to rotate its cyclic order

    Returns:
        Web with framings and wall classes on the internal edges

    Raises:
        FanError: If a cone is not smooth
        NotCalabiYauError: If the fan is not Calabi-Yau
    """
    for cone in fan.cones:
        if not fan.is_smooth_cone(cone):
            raise FanError(f"cone {list(cone)} is not smooth (determinant {fan.cone_det(cone)}); "
                           f"the vertex formalism needs a smooth fan")
    polygon = height_one_polygon(fan, cy_vector(fan))
    rotate = rotate or {}
    reverse = {tuple(sorted(w)) for w in reverse}
    vertices = tuple(_vertex(polygon, k, rotate.get(k, 0)) for k in range(len(fan.cones)))

    edges = []
    for wall in sorted(fan.compact_walls):
        source, target = sorted(fan.walls[wall])
        if wall in reverse:
            source, target = target, source
        s_slot = vertices[source].slot_of(wall)
        t_slot = vertices[target].slot_of(wall)
        direction = vertices[source].directions[s_slot]
        back = vertices[target].directions[t_slot]
        if back != (-direction[0], -direction[1]):
            raise FanError(f"web edge {list(wall)} is not straight: {direction} vs {back}")
        framing = wedge(vertices[target].directions[(t_slot + 1) % 3],
                        vertices[source].directions[(s_slot + 1) % 3])
        edges.append(WebEdge(wall, source, target, s_slot, t_slot, direction, framing,
                             wall_class(fan, wall)))

    legs = []
    for wall in sorted(fan.boundary_walls):
        (owner,) = fan.walls[wall]
        slot = vertices[owner].slot_of(wall)
        legs.append(WebLeg(wall, owner, slot, vertices[owner].directions[slot]))

    web = Web(fan, vertices, tuple(edges), tuple(legs))
    logger.debug("[VERTEX] web with %d vertices, %d edges, %d legs",
                 len(web.vertices), len(web.edges), len(web.legs))
    return web


def framings(web: Web) -> Dict[Wall, int]:
    return {e.wall: e.framing for e in web.edges}
