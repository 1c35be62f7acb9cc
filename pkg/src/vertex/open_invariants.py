"""
Open genus-zero invariants of a toric Calabi-Yau threefold.

The disc class b = beta_0 + alpha is traded for the closed class alpha + h
on the fiberwise compactification, carried through the blowup at a fixed
point on D_inf (strict transform), the flop and the removal of v_inf, and
read off as a closed invariant of the resulting fan W_0.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.homology.classes import CurveClass, fiber_class, kernel_basis
from src.homology.transport import compactify_transport, transport_step
from src.lattice.fan import Fan, Wall, compact_divisor_rays, is_fano_surface
from src.surgery.pipeline import enumerate_fixed_points, open_invariant_surgery
from src.surgery.steps import Compactify, SurgeryTrace
from src.utils.errors import ConventionMismatchError, DegreeCapError, QueryError
from src.vertex.conventions import ledger_hash
from src.vertex.free_energy import free_energy
from src.vertex.gv import extract_gv
from src.vertex.partition_function import partition_function, required_cap
from src.vertex.tables import GVTable, fan_fingerprint
from src.vertex.web import build_web

logger = logging.getLogger(__name__)

ALL_FIXED_POINTS = "all"


@dataclass(frozen=True)
class OpenInvariantQuery:
    """
    fan0 with a compact divisor ray d0 (the basic disc meets D_d0 once),
    a closed class alpha on fan0 and a fixed-point choice.
    """

    fan0: Fan
    d0: int
    alpha: CurveClass
    fixed_point: Union[str, Wall] = ALL_FIXED_POINTS

    def validated(self) -> "OpenInvariantQuery":
        """
        Raises:
            QueryError: If d0 is not a compact divisor ray, alpha is zero or
                alpha is not a class of fan0
        """
        if self.d0 not in compact_divisor_rays(self.fan0):
            raise QueryError(f"ray {self.d0} is not a compact divisor ray; "
                             f"choose one of {sorted(compact_divisor_rays(self.fan0))}")
        if not self.alpha.satisfies_kernel_condition(self.fan0):
            raise QueryError(f"{list(self.alpha.entries)} is not a curve class of the fan")
        if self.alpha.is_zero():
            raise QueryError("α must be nonzero (n_b = 1 for basic disc classes)")
        return self

    def fixed_points(self) -> Tuple[Wall, ...]:
        if self.fixed_point == ALL_FIXED_POINTS:
            return enumerate_fixed_points(self.fan0, self.d0)
        return (tuple(sorted(self.fixed_point)),)


@dataclass(frozen=True)
class FixedPointResult:
    fixed_point: Wall
    w0: Fan
    trace: SurgeryTrace
    # class after every step of the trace
    chain: Tuple[CurveClass, ...]
    fiber: CurveClass
    cap: int
    invariant: int

    @property
    def alpha_prime(self) -> CurveClass:
        return self.chain[-1]

    def to_document(self) -> Dict[str, Any]:
        classes: List[Dict[str, Any]] = [{"class": list(c.entries)} for c in self.chain]
        classes[0]["fiber"] = list(self.fiber.entries)
        document = self.trace.to_document(classes)
        document.update({
            "fixed_point": list(self.fixed_point),
            "alpha_prime": list(self.alpha_prime.entries),
            "cap": self.cap,
            "invariant": self.invariant,
            "convention_ledger": ledger_hash(),
            "fan_fingerprint": fan_fingerprint(self.w0),
        })
        return document


@dataclass(frozen=True)
class OpenInvariantResult:
    query: OpenInvariantQuery
    fano: bool
    results: Tuple[FixedPointResult, ...]

    @property
    def values(self) -> Tuple[int, ...]:
        return tuple(r.invariant for r in self.results)

    @property
    def value(self) -> int:
        return self.values[0]

    def to_document(self) -> Dict[str, Any]:
        return {
            "divisor": self.query.d0,
            "alpha": list(self.query.alpha.entries),
            "fano": self.fano,
            "fixed_points": [r.to_document() for r in self.results],
        }


def transported_chain(fan0: Fan, d0: int, alpha: CurveClass,
                      trace: SurgeryTrace) -> Tuple[Tuple[CurveClass, ...], CurveClass]:
    """
    Classes along the trace: alpha + h after compactifying, then the strict
    transform, the flop and the descent.

    Returns:
        (class after each step, fiber class h)
    """
    first = trace.steps[0]
    if not isinstance(first, Compactify):
        raise QueryError("trace does not start with a compactification")
    fan_c = trace.fans[0]
    h = fiber_class(fan_c, d0, first.new_ray)
    cls = (compactify_transport(first, alpha.checked(fan0)) + h).checked(fan_c)
    chain = [cls]
    for step, fan in zip(trace.steps[1:], trace.fans[1:]):
        cls = transport_step(step, cls, fan, strict=True).checked(fan)
        chain.append(cls)
    return tuple(chain), h


def closed_invariant(fan: Fan, cls: CurveClass, cap: Optional[int] = None,
                     workers: Optional[int] = None,
                     cache: Optional[Dict[Tuple[str, int], GVTable]] = None) -> Tuple[int, int]:
    """
    Genus-zero invariant of one class of a smooth Calabi-Yau fan.

    Args:
        fan: smooth Calabi-Yau fan
        cls: class on the fan
        cap: box cap (the class's required cap when omitted)
        workers: worker processes
        cache: tables already computed, keyed by (fan fingerprint, cap)

    Returns:
        (invariant, cap used)

    Raises:
        DegreeCapError: If the class is not complete at the given cap
    """
    web = build_web(fan)
    needed = required_cap(web, cls)
    if cap is None:
        cap = needed
    if needed > cap:
        raise DegreeCapError(
            f"class {list(cls.entries)} needs cap {needed}, got {cap}; increase degree cap",
            required_cap=needed, missing=(cls,))
    if needed == 0:
        logger.warning("[PIPELINE] class %s is not a sum of wall classes; its invariant is 0",
                       list(cls.entries))
        return 0, cap

    key = (fan_fingerprint(fan), cap)
    table = cache.get(key) if cache is not None else None
    if table is None:
        Z = partition_function(web, cap, workers)
        table = extract_gv(free_energy(Z, cap), kernel_basis(fan))
        if cache is not None:
            cache[key] = table
    for coords, beta in table.classes.items():
        if beta == cls:
            return table[coords], cap
    return 0, cap


def open_gw(query: OpenInvariantQuery, cap: Optional[int] = None,
            workers: Optional[int] = None) -> OpenInvariantResult:
    """
    Open invariant n_b for b = beta_0 + alpha, once per requested fixed point.

    Args:
        query: open-invariant query
        cap: box cap on W_0 (the required cap of alpha' when omitted)
        workers: worker processes for the summation

    Returns:
        OpenInvariantResult with one entry per fixed point and the Fano advisory

    Raises:
        QueryError: For an invalid query, including alpha = 0
        SurgeryError: If a fixed point does not yield a simple flop
        DegreeCapError: If alpha' is not complete at the given cap
        ConventionMismatchError: If fixed-point choices disagree
    """
    query = query.validated()
    fano = is_fano_surface(query.fan0, query.d0)
    if not fano:
        logger.warning("[PIPELINE] compact divisor %d is not a Fano surface; "
                       "the open/closed identification assumes it is", query.d0)

    cache: Dict[Tuple[str, int], GVTable] = {}
    results = []
    fixed_points = query.fixed_points()
    for k, wall in enumerate(fixed_points, start=1):
        logger.info("[PIPELINE] fixed point %d/%d: <v_inf, %d, %d>", k, len(fixed_points), *wall)
        w0, trace = open_invariant_surgery(query.fan0, query.d0, wall)
        chain, h = transported_chain(query.fan0, query.d0, query.alpha, trace)
        value, used = closed_invariant(w0, chain[-1], cap, workers, cache)
        logger.info("[PIPELINE] alpha' = %s, n_b = %d", list(chain[-1].entries), value)
        results.append(FixedPointResult(wall, w0, trace, chain, h, used, value))

    result = OpenInvariantResult(query, fano, tuple(results))
    if len(set(result.values)) > 1:
        raise ConventionMismatchError(f"fixed-point choices disagree: {list(result.values)}")
    return result


def open_gw_values(fan0: Fan, d0: int, alpha: Sequence[int], fixed_point: Union[str, Wall] = ALL_FIXED_POINTS,
                   cap: Optional[int] = None, workers: Optional[int] = None) -> Tuple[int, ...]:
    """Shorthand returning only the invariants."""
    return open_gw(OpenInvariantQuery(fan0, d0, CurveClass(tuple(alpha)), fixed_point), cap, workers).values
