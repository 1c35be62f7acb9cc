"""
Schur functions at shifted principal specializations.

Variables are x_i = t^(2i - 1 - 2 nu_i), i >= 1, for a shift partition nu
(q^(-nu-rho) with t = q^(1/2)). Skew functions come from Jacobi-Trudi
determinants; the complete and elementary symmetric functions split into
a finite part over the shifted variables and a closed-form geometric tail.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from src.qpartitions.laurent import ONE, ZERO, LaurentPoly
from src.qpartitions.partitions import Partition, conjugate, contains, hooks, n_statistic
from src.qpartitions.qrational import QRational
from src.utils.errors import QRationalError

logger = logging.getLogger(__name__)


def schur_principal(lam: Partition) -> QRational:
    """
    s_lam(t, t^3, t^5, ...) in closed form.

    Equals t^(|lam| + 2 n(lam)) / prod over cells of (1 - t^(2 hook)).
    """
    lam = tuple(lam)
    exponent = sum(lam) + 2 * n_statistic(lam)
    return QRational.inverse_product([2 * h for h in hooks(lam)], LaurentPoly.monomial(1, exponent))


def _shifted_variables(shift: Partition) -> List[int]:
    """Exponents of the variables that differ from the unshifted tail."""
    return [2 * i - 1 - 2 * part for i, part in enumerate(shift, start=1)]


@lru_cache(maxsize=None)
def _finite_part(shift: Partition, degree: int, elementary: bool) -> Tuple[LaurentPoly, ...]:
    """h_j (or e_j) of the shifted variables alone, for j = 0..degree."""
    table = [ONE] + [ZERO] * degree
    for exponent in _shifted_variables(shift):
        if elementary:
            table = [table[0]] + [table[j] + table[j - 1].shift(exponent) for j in range(1, degree + 1)]
        else:
            grown = []
            for j in range(degree + 1):
                acc = ZERO
                for a in range(j + 1):
                    if not table[j - a].is_zero():
                        acc = acc + table[j - a].shift(a * exponent)
                grown.append(acc)
            table = grown
    return tuple(table)


def _tail(length: int, m: int, elementary: bool) -> QRational:
    """h_m (or e_m) of the variables t^(2i-1), i > length."""
    if m == 0:
        return QRational.monomial(1)
    exponent = 2 * length * m + m * m if elementary else (2 * length + 1) * m
    return QRational.inverse_product([2 * j for j in range(1, m + 1)], LaurentPoly.monomial(1, exponent))


@lru_cache(maxsize=None)
def complete_homogeneous(k: int, shift: Partition = ()) -> QRational:
    """h_k at the shifted specialization; zero for k < 0."""
    return _generating_coefficient(k, tuple(shift), elementary=False)


@lru_cache(maxsize=None)
def elementary_symmetric(k: int, shift: Partition = ()) -> QRational:
    """e_k at the shifted specialization; zero for k < 0."""
    return _generating_coefficient(k, tuple(shift), elementary=True)


def _generating_coefficient(k: int, shift: Partition, elementary: bool) -> QRational:
    if k < 0:
        return QRational()
    if k == 0:
        return QRational.monomial(1)
    finite = _finite_part(shift, k, elementary)
    terms = [
        _tail(len(shift), k - j, elementary) * finite[j]
        for j in range(k + 1)
        if not finite[j].is_zero()
    ]
    return QRational.sum(terms)


def _determinant(entries: List[List[Optional[QRational]]]) -> QRational:
    """Laplace expansion along rows, memoized on the set of used columns."""
    n = len(entries)
    memo: Dict[Tuple[int, int], QRational] = {}

    def expand(row: int, used: int) -> QRational:
        if row == n:
            return QRational.monomial(1)
        key = (row, used)
        if key in memo:
            return memo[key]
        terms = []
        position = 0
        for col in range(n):
            if used & (1 << col):
                continue
            entry = entries[row][col]
            if entry is not None and not entry.is_zero():
                minor = expand(row + 1, used | (1 << col))
                if not minor.is_zero():
                    term = entry * minor
                    terms.append(-term if position % 2 else term)
            position += 1
        memo[key] = QRational.sum(terms)
        return memo[key]

    return expand(0, 0)


@lru_cache(maxsize=None)
def skew_schur_specialized(lam: Partition, eta: Partition = (), shift: Partition = ()) -> QRational:
    """
    s_{lam/eta} at x_i = t^(2i - 1 - 2 shift_i).

    Uses the h-form Jacobi-Trudi matrix (size = length of lam) or the e-form
    (size = first part of lam), whichever is smaller.

    Args:
        lam: outer partition
        eta: inner partition
        shift: partition nu of the specialization

    Returns:
        Exact rational function

    Raises:
        QRationalError: If eta is not contained in lam
    """
    lam, eta, shift = tuple(lam), tuple(eta), tuple(shift)
    if not contains(lam, eta):
        raise QRationalError(f"skew shape {lam}/{eta}: inner partition not contained in outer")
    if lam == eta:
        return QRational.monomial(1)
    if not eta and not shift:
        return schur_principal(lam)

    if len(lam) <= lam[0]:
        rows, inner, entry = lam, eta, complete_homogeneous
    else:
        rows, inner, entry = conjugate(lam), conjugate(eta), elementary_symmetric
    n = len(rows)
    inner = inner + (0,) * (n - len(inner))
    matrix = []
    for i in range(n):
        row = []
        for j in range(n):
            k = rows[i] - inner[j] - i + j
            row.append(entry(k, shift) if k >= 0 else None)
        matrix.append(row)
    value = _determinant(matrix)
    logger.debug("[SCHUR] s_%s/%s at shift %s computed from a %dx%d determinant", lam, eta, shift, n, n)
    return value.reduced()
