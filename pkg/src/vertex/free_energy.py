"""
Formal logarithm of a truncated partition function, class by class.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from src.homology.classes import CurveClass
from src.qpartitions.qrational import QRational
from src.utils.errors import DegreeCapError
from src.vertex.partition_function import PartitionFunction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FreeEnergy:
    partition_function: PartitionFunction
    cap: int
    coefficients: Dict[CurveClass, QRational] = field(default_factory=dict)

    def coefficient(self, cls: CurveClass) -> QRational:
        return self.coefficients.get(cls, QRational())

    def classes(self) -> List[CurveClass]:
        return sorted(self.coefficients, key=lambda c: (self.partition_function.degree(c), c.entries))

    def is_complete(self, cls: CurveClass) -> bool:
        return self.partition_function.required_cap(cls) <= self.cap


def free_energy(Z: PartitionFunction, cap: Optional[int] = None) -> FreeEnergy:
    """
    F = log Z by degree: with g a positive grading,

        F_beta = Z_beta - (1/g(beta)) sum_gamma g(gamma) F_gamma Z_(beta-gamma)

    over the classes gamma != beta already processed.

    Args:
        Z: truncated partition function
        cap: box cap of the result (defaults to the cap of Z)

    Returns:
        FreeEnergy on the support of Z

    Raises:
        DegreeCapError: If cap exceeds the cap Z was computed at
    """
    cap = Z.cap if cap is None else cap
    if cap > Z.cap:
        raise DegreeCapError(f"partition function was truncated at cap {Z.cap}; cannot give F at cap {cap}; "
                             f"increase degree cap", required_cap=cap)
    F: Dict[CurveClass, QRational] = {}
    for beta in Z.classes():
        g_beta = Z.degree(beta)
        terms = []
        for gamma, f_gamma in F.items():
            rest = beta - gamma
            if rest.is_zero() or rest not in Z.coefficients:
                continue
            terms.append(f_gamma * Z.coefficients[rest] * Z.degree(gamma))
        value = Z.coefficients[beta]
        if terms:
            value = value - QRational.sum(terms) * Fraction(1, g_beta)
        F[beta] = value.reduced()
    logger.info("[VERTEX] free energy on %d classes", len(F))
    return FreeEnergy(Z, cap, F)
