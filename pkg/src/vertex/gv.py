"""
Genus-zero Gopakumar-Vafa extraction from the free energy.
"""

import logging
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Union

from src.config import settings
from src.homology.classes import ClassLattice, CurveClass, class_in_basis, kernel_basis, named_basis
from src.lattice.fan import Fan
from src.qpartitions.laurent import LaurentPoly
from src.qpartitions.qrational import QRational
from src.utils.errors import ConventionMismatchError, PoleError
from src.vertex.free_energy import FreeEnergy, free_energy
from src.vertex.partition_function import partition_function
from src.vertex.tables import GVTable
from src.vertex.web import build_web

logger = logging.getLogger(__name__)

# (t - 1/t)^2
GENUS_ZERO_WEIGHT = QRational(LaurentPoly.from_dict({-2: 1, 0: -2, 2: 1}))


def genus_zero_number(F: QRational, sigma: int) -> Fraction:
    """
    sigma * lim_(t->1) (t - 1/t)^2 F.

    Raises:
        ConventionMismatchError: If (t - 1/t)^2 F still has a pole at t = 1
    """
    try:
        return sigma * (GENUS_ZERO_WEIGHT * F).limit_at_one()
    except PoleError as e:
        raise ConventionMismatchError(f"convention mismatch: genus-zero limit diverges ({e})") from e


def multicover_inversion(N: Dict[CurveClass, Fraction], F: FreeEnergy) -> Dict[CurveClass, int]:
    """
    n_beta = N_beta - sum_(k>=2, beta/k integral) n_(beta/k) / k^3, in increasing degree.

    Divisibility is that of the kernel vector itself.

    Raises:
        ConventionMismatchError: If some n_beta is not an integer
    """
    n: Dict[CurveClass, int] = {}
    for beta in sorted(N, key=lambda c: (F.partition_function.degree(c), c.entries)):
        value = N[beta]
        content = beta.content()
        for k in range(2, content + 1):
            if content % k:
                continue
            value -= Fraction(n.get(beta.divided(k), 0), k ** 3)
        if value.denominator != 1:
            raise ConventionMismatchError(
                f"convention mismatch: invariant of class {list(beta.entries)} is {value}, not an integer")
        n[beta] = int(value)
    return n


def extract_gv(F: FreeEnergy, lattice: Optional[ClassLattice] = None, sigma: Optional[int] = None) -> GVTable:
    """
    Integer genus-zero invariants of every complete class.

    Args:
        F: free energy
        lattice: basis the classes are reported in (defaults to the kernel basis)
        sigma: global extraction sign (defaults to settings.EXTRACTION_SIGN)

    Returns:
        GVTable of complete classes; the others are listed as unreachable

    Raises:
        ConventionMismatchError: If a limit diverges or an invariant is not an integer
    """
    sigma = settings.EXTRACTION_SIGN if sigma is None else sigma
    fan = F.partition_function.web.fan
    lattice = kernel_basis(fan) if lattice is None else lattice
    complete = [beta for beta in F.classes() if F.is_complete(beta)]
    unreachable = [beta for beta in F.classes() if not F.is_complete(beta)]
    logger.info("[EXTRACTION] %d complete classes, %d beyond the cap", len(complete), len(unreachable))

    N = {beta: genus_zero_number(F.coefficient(beta), sigma) for beta in complete}
    n = multicover_inversion(N, F)
    invariants = {class_in_basis(lattice, beta): value for beta, value in n.items()}
    classes = {class_in_basis(lattice, beta): beta for beta in n}
    missing = tuple(class_in_basis(lattice, beta) for beta in unreachable)
    return GVTable(lattice, F.cap, invariants, classes, missing)


def gw_table(fan: Fan, basis: Union[ClassLattice, Mapping[str, Sequence[int]], None] = None,
             cap: Optional[int] = None, workers: Optional[int] = None) -> GVTable:
    """
    Genus-zero invariants of a smooth Calabi-Yau fan up to a box cap.

    Args:
        fan: valid smooth Calabi-Yau fan
        basis: named classes (name -> kernel vector) or a class lattice;
            the kernel basis when omitted
        cap: total box degree (defaults to settings.DEFAULT_CAP)
        workers: worker processes for the summation

    Returns:
        GVTable with classes in the given basis
    """
    cap = settings.DEFAULT_CAP if cap is None else cap
    if basis is None:
        lattice = kernel_basis(fan)
    elif isinstance(basis, ClassLattice):
        lattice = basis
    else:
        lattice = named_basis(fan, basis)
    logger.info("[VERTEX] STEP 1/4: web")
    web = build_web(fan)
    logger.info("[VERTEX] STEP 2/4: partition function at cap %d", cap)
    Z = partition_function(web, cap, workers)
    logger.info("[VERTEX] STEP 3/4: free energy")
    F = free_energy(Z, cap)
    logger.info("[VERTEX] STEP 4/4: extraction")
    return extract_gv(F, lattice)
