"""
Truncated partition function of a web.

Assignments of partitions to the internal edges are enumerated in a
canonical order, evaluated independently and reduced by exact addition.
Legs always carry the empty partition.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.config import settings
from src.homology.classes import CurveClass
from src.qpartitions.partitions import Partition, conjugate, partitions_of
from src.qpartitions.qrational import QRational
from src.utils.errors import FanError
from src.vertex.amplitudes import edge_factor, vertex_amplitude
from src.vertex.web import Web

logger = logging.getLogger(__name__)

SizeVector = Tuple[int, ...]


def _pairing(grading: Sequence[int], cls: Sequence[int]) -> int:
    return sum(g * c for g, c in zip(grading, cls))


def positive_grading(classes: Sequence[CurveClass], max_rounds: Optional[int] = None) -> Tuple[int, ...]:
    """
    Integral pairing positive on every given class, found by perceptron updates.

    Args:
        classes: nonzero classes of one fan
        max_rounds: update bound (defaults to settings.GRADING_MAX_ROUNDS)

    Returns:
        Integer vector g with sum g_i c_i > 0 for every class c

    Raises:
        FanError: If no such pairing is found within the bound
    """
    if not classes:
        return ()
    rounds = settings.GRADING_MAX_ROUNDS if max_rounds is None else max_rounds
    g = [0] * len(classes[0])
    for _ in range(rounds):
        bad = next((c for c in classes if _pairing(g, c.entries) <= 0), None)
        if bad is None:
            return tuple(g)
        g = [a + b for a, b in zip(g, bad.entries)]
    raise FanError("wall classes admit no positive grading; the web has no strongly convex class cone")


def decompositions(edge_classes: Sequence[CurveClass], grading: Sequence[int],
                   cls: CurveClass) -> Iterator[Tuple[int, ...]]:
    """Every multiplicity vector m >= 0 with sum m_e c_e = cls."""
    degrees = [_pairing(grading, c.entries) for c in edge_classes]

    def walk(k: int, rest: Tuple[int, ...], prefix: Tuple[int, ...]):
        if k == len(edge_classes):
            if not any(rest):
                yield prefix
            return
        budget = _pairing(grading, rest)
        if budget < 0:
            return
        c = edge_classes[k].entries
        for m in range(budget // degrees[k] + 1):
            yield from walk(k + 1, tuple(r - m * x for r, x in zip(rest, c)), prefix + (m,))

    yield from walk(0, cls.entries, ())


def required_cap(web: Web, cls: CurveClass, grading: Optional[Sequence[int]] = None) -> int:
    """
    Smallest box cap at which the coefficient of a class is complete.

    The largest number of boxes over all ways of writing the class as a sum
    of edge classes; 0 when the class is not such a sum.
    """
    if grading is None:
        grading = positive_grading(web.edge_classes)
    return max((sum(m) for m in decompositions(web.edge_classes, grading, cls)), default=0)


@dataclass(frozen=True)
class Gluing:
    """Picklable per-term data of a web."""

    vertex_count: int
    ray_count: int
    # (source, source_slot, target, target_slot, framing) per internal edge
    edges: Tuple[Tuple[int, int, int, int, int], ...]
    classes: Tuple[CurveClass, ...]

    @classmethod
    def of(cls, web: Web) -> "Gluing":
        edges = tuple((e.source, e.source_slot, e.target, e.target_slot, e.framing) for e in web.edges)
        return cls(len(web.vertices), len(web.fan.rays), edges, web.edge_classes)

    def class_of(self, sizes: SizeVector) -> CurveClass:
        total = CurveClass((0,) * self.ray_count)
        for s, c in zip(sizes, self.classes):
            total = total + c * s
        return total

    def term(self, partitions: Sequence[Partition]) -> QRational:
        slots: List[List[Partition]] = [[(), (), ()] for _ in range(self.vertex_count)]
        value = QRational.monomial(1)
        for lam, (src, s_slot, tgt, t_slot, framing) in zip(partitions, self.edges):
            slots[src][s_slot] = lam
            slots[tgt][t_slot] = conjugate(lam)
            value = value * edge_factor(lam, framing)
        for lam, mu, nu in slots:
            value = value * vertex_amplitude(lam, mu, nu)
        return value


def _size_vectors(edge_count: int, cap: int) -> Iterator[SizeVector]:
    """Box counts per edge with total at most cap, by total then lexicographically."""

    def split(total: int, parts: int):
        if parts == 0:
            if total == 0:
                yield ()
            return
        for first in range(total, -1, -1):
            for rest in split(total - first, parts - 1):
                yield (first,) + rest

    for total in range(cap + 1):
        yield from split(total, edge_count)


def sizes_term(gluing: Gluing, sizes: SizeVector) -> QRational:
    """Sum of the terms of every assignment with the given box counts."""
    terms = [gluing.term(lams) for lams in product(*(partitions_of(s) for s in sizes))]
    return QRational.sum(terms)


@dataclass(frozen=True)
class PartitionFunction:
    """
    Z truncated at a total box cap, keyed by curve class.
    The zero class always carries 1.
    """

    web: Web
    cap: int
    grading: Tuple[int, ...]
    coefficients: Dict[CurveClass, QRational] = field(default_factory=dict)

    def degree(self, cls: CurveClass) -> int:
        return _pairing(self.grading, cls.entries)

    def coefficient(self, cls: CurveClass) -> QRational:
        return self.coefficients.get(cls, QRational())

    def classes(self) -> List[CurveClass]:
        """Reached classes other than zero, by increasing degree."""
        return sorted((c for c in self.coefficients if not c.is_zero()),
                      key=lambda c: (self.degree(c), c.entries))

    def required_cap(self, cls: CurveClass) -> int:
        return required_cap(self.web, cls, self.grading)

    def is_complete(self, cls: CurveClass) -> bool:
        return self.required_cap(cls) <= self.cap


def partition_function(web: Web, cap: int, workers: Optional[int] = None) -> PartitionFunction:
    """
    Sum over partition assignments to the internal edges with at most cap boxes.

    Args:
        web: web of a smooth Calabi-Yau fan
        cap: total box degree D >= 0
        workers: worker processes (defaults to settings.DEFAULT_WORKERS)

    Returns:
        PartitionFunction with exact, reduced coefficients
    """
    if cap < 0:
        raise ValueError(f"cap must be nonnegative, got {cap}")
    workers = settings.DEFAULT_WORKERS if workers is None else workers
    gluing = Gluing.of(web)
    grading = positive_grading(web.edge_classes)
    chunks = list(_size_vectors(len(web.edges), cap))
    logger.info("[VERTEX] summing %d box-count vectors at cap %d with %d worker(s)", len(chunks), cap, workers)

    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            values = list(executor.map(partial(sizes_term, gluing), chunks))
    else:
        values = [sizes_term(gluing, sizes) for sizes in chunks]

    grouped: Dict[CurveClass, List[QRational]] = {}
    for sizes, value in zip(chunks, values):
        grouped.setdefault(gluing.class_of(sizes), []).append(value)
    coefficients = {cls: QRational.sum(parts) for cls, parts in grouped.items()}
    logger.info("[VERTEX] partition function has %d classes", len(coefficients))
    return PartitionFunction(web, cap, grading, coefficients)
