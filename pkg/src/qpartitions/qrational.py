"""
Exact rational functions in t = q^(1/2).

Denominators are kept factored into cyclotomic polynomials, which is the
shape every vertex amplitude has, times an optional residual integer
polynomial for general quotients.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import Integer, Poly, cyclotomic_poly, divisors, factorint, gcd as poly_gcd, symbols, totient

from src.qpartitions.laurent import ONE, ZERO, Coefficient, LaurentPoly
from src.utils.errors import PoleError, QRationalError

logger = logging.getLogger(__name__)

_T = symbols("t")

Factors = Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, constant term first."""
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(n, _T), _T).all_coeffs()))


@lru_cache(maxsize=None)
def cyclotomic_at_one(n: int) -> int:
    return sum(cyclotomic(n))


@lru_cache(maxsize=None)
def factors_product(factors: Factors) -> LaurentPoly:
    """Expanded product of cyclotomic powers."""
    result = ONE
    for n, m in factors:
        phi = LaurentPoly(cyclotomic(n))
        for _ in range(m):
            result = result * phi
    return result


@lru_cache(maxsize=None)
def one_minus_t_power_factors(k: int) -> Factors:
    """1 - t^k = -prod_{d | k} Phi_d(t)."""
    return tuple((d, 1) for d in divisors(k))


def _merge(a: Factors, b: Factors) -> Factors:
    counts = Counter(dict(a))
    counts.update(dict(b))
    return tuple(sorted((n, m) for n, m in counts.items() if m))


def _to_sympy(p: LaurentPoly) -> Poly:
    """Polynomial part (offset dropped) as a sympy Poly over QQ."""
    return Poly(list(reversed(p.coeffs)) or [0], _T, domain="QQ")


def _from_sympy(p: Poly, low: int = 0) -> LaurentPoly:
    coeffs = [Fraction(int(c.p), int(c.q)) if hasattr(c, "q") else Fraction(c) for c in reversed(p.all_coeffs())]
    return LaurentPoly(coeffs, low)


def _split_cyclotomic(p: LaurentPoly) -> Tuple[Factors, LaurentPoly]:
    """
    Pull cyclotomic factors out of a primitive polynomial with nonzero constant term.

    Returns:
        (cyclotomic factors, remaining primitive polynomial)
    """
    if len(p.coeffs) <= 1:
        return (), p
    found: Dict[int, int] = {}
    _, irreducibles = _to_sympy(p).factor_list()
    for factor, mult in irreducibles:
        if not factor.is_cyclotomic:
            continue
        degree = factor.degree()
        coeffs = tuple(int(c) for c in reversed(factor.monic().all_coeffs()))
        for n in range(1, 2 * degree * degree + 7):
            if totient(n) == degree and cyclotomic(n) == coeffs:
                found[n] = found.get(n, 0) + mult
                break
    rest = p
    for n, m in found.items():
        for _ in range(m):
            rest, _rem = rest.divmod_monic(cyclotomic(n))
    _, rest = rest.content()
    return tuple(sorted(found.items())), rest


class QRational:
    """
    Exact rational function num / (prod Phi_n^m * residual).

    The residual is a primitive integer polynomial with nonzero constant
    term and positive leading coefficient; it is 1 for every function built
    from monomials and factors (1 - t^k). Arithmetic does not cancel common
    factors; reduced() does.
    """

    __slots__ = ("num", "den", "residual")

    def __init__(self, num: LaurentPoly = ZERO, den: Factors = (), residual: LaurentPoly = ONE):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", tuple(den) if not num.is_zero() else ())
        object.__setattr__(self, "residual", residual if not num.is_zero() else ONE)

    def __setattr__(self, name, value):
        raise AttributeError("QRational is immutable")

    def __reduce__(self):
        return (QRational, (self.num, self.den, self.residual))

    # construction

    @classmethod
    def coerce(cls, value: Union["QRational", LaurentPoly, int, Fraction]) -> "QRational":
        if isinstance(value, QRational):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value)
        if isinstance(value, (int, Fraction)):
            return cls(LaurentPoly.monomial(value))
        raise TypeError(f"cannot convert {type(value).__name__} to QRational")

    @classmethod
    def monomial(cls, coefficient: Coefficient = 1, exponent: int = 0) -> "QRational":
        return cls(LaurentPoly.monomial(coefficient, exponent))

    @classmethod
    def from_coefficients(cls, coeffs: Sequence[Coefficient], low: int = 0) -> "QRational":
        return cls(LaurentPoly(coeffs, low))

    @classmethod
    def inverse_product(cls, exponents: Iterable[int], numerator: Optional[LaurentPoly] = None) -> "QRational":
        """
        numerator / prod_k (1 - t^k) over the given exponents.

        Args:
            exponents: positive integers k
            numerator: Laurent polynomial (defaults to 1)
        """
        num = ONE if numerator is None else numerator
        factors: Factors = ()
        sign = 1
        for k in exponents:
            if k <= 0:
                raise QRationalError(f"exponent {k} must be positive")
            factors = _merge(factors, one_minus_t_power_factors(k))
            sign = -sign
        return cls(num.scale(sign), factors)

    @classmethod
    def one_minus_t_power(cls, k: int) -> "QRational":
        """The polynomial 1 - t^k."""
        return cls(LaurentPoly.from_dict({0: 1, k: -1}))

    # structure

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den and self.residual == ONE

    def denominator(self) -> LaurentPoly:
        """Expanded denominator polynomial."""
        d = factors_product(self.den)
        return d if self.residual == ONE else d * self.residual

    def __repr__(self) -> str:
        if self.is_polynomial():
            return f"QRational({self.num!r})"
        parts = [f"Phi{n}^{m}" if m > 1 else f"Phi{n}" for n, m in self.den]
        if self.residual != ONE:
            parts.append(f"({self.residual!r})")
        return f"QRational(({self.num!r}) / {' * '.join(parts)})"

    def to_expr(self):
        """sympy expression in the symbol t."""
        num = sum((c * _T ** e for e, c in self.num.items()), Integer(0))
        den = 1
        for n, m in self.den:
            den *= cyclotomic_poly(n, _T) ** m
        if self.residual != ONE:
            den *= sum(c * _T ** e for e, c in self.residual.items())
        return num / den

    # arithmetic

    def __neg__(self) -> "QRational":
        return QRational(-self.num, self.den, self.residual)

    def __add__(self, other) -> "QRational":
        try:
            other = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.den == other.den and self.residual == other.residual:
            return QRational(self.num + other.num, self.den, self.residual)

        mine, theirs = dict(self.den), dict(other.den)
        common = {n: max(mine.get(n, 0), theirs.get(n, 0)) for n in set(mine) | set(theirs)}
        cof_self = tuple(sorted((n, m - mine.get(n, 0)) for n, m in common.items() if m > mine.get(n, 0)))
        cof_other = tuple(sorted((n, m - theirs.get(n, 0)) for n, m in common.items() if m > theirs.get(n, 0)))
        num_self = self.num * factors_product(cof_self)
        num_other = other.num * factors_product(cof_other)

        residual = self.residual
        if self.residual != other.residual:
            g = _residual_gcd(self.residual, other.residual)
            r_self = _exact_div(other.residual, g)[0]
            r_other = _exact_div(self.residual, g)[0]
            num_self = num_self * r_self
            num_other = num_other * r_other
            residual = self.residual * r_self
        den = tuple(sorted((n, m) for n, m in common.items() if m))
        return QRational(num_self + num_other, den, residual)

    __radd__ = __add__

    def __sub__(self, other) -> "QRational":
        return self + (-QRational.coerce(other))

    def __rsub__(self, other) -> "QRational":
        return QRational.coerce(other) + (-self)

    def __mul__(self, other) -> "QRational":
        if isinstance(other, (int, Fraction)):
            return QRational(self.num.scale(other), self.den, self.residual)
        if isinstance(other, LaurentPoly):
            return QRational(self.num * other, self.den, self.residual)
        if not isinstance(other, QRational):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QRational()
        residual = self.residual
        if other.residual != ONE:
            residual = other.residual if residual == ONE else residual * other.residual
        return QRational(self.num * other.num, _merge(self.den, other.den), residual)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QRational":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise QRationalError("division by zero")
            return QRational(self.num.scale(Fraction(1) / other), self.den, self.residual)
        other = QRational.coerce(other)
        if other.is_zero():
            raise QRationalError("division by zero")
        # a / (p / d) = a * d / p with p = c * t^low * P, P primitive
        content, primitive = other.num.content()
        low = primitive.low
        primitive = primitive.shift(-low)
        split, rest = _split_cyclotomic(primitive)
        num = (self.num * other.denominator()).shift(-low).scale(Fraction(1) / content)
        residual = self.residual
        if rest != ONE:
            residual = rest if residual == ONE else residual * rest
        return QRational(num, _merge(self.den, split), residual).reduced()

    def __rtruediv__(self, other) -> "QRational":
        return QRational.coerce(other) / self

    def __pow__(self, exponent: int) -> "QRational":
        if exponent < 0:
            return QRational.monomial(1) / (self ** (-exponent))
        result = QRational.monomial(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        try:
            other = QRational.coerce(other)
        except TypeError:
            return NotImplemented
        # cross multiplication
        return self.num * other.denominator() == other.num * self.denominator()

    __hash__ = None

    @staticmethod
    def sum(terms: Iterable["QRational"]) -> "QRational":
        """
        Exact sum of many terms over one common denominator, reduced once.

        Terms sharing a denominator are combined first, so each distinct
        denominator is multiplied out a single time.
        """
        groups: Dict[Tuple[Factors, LaurentPoly], LaurentPoly] = {}
        for term in terms:
            if term.is_zero():
                continue
            key = (term.den, term.residual)
            groups[key] = groups.get(key, ZERO) + term.num
        total = QRational()
        if all(residual == ONE for _, residual in groups):
            common: Dict[int, int] = {}
            for den, _ in groups:
                for n, m in den:
                    common[n] = max(common.get(n, 0), m)
            num = ZERO
            for (den, _), part in groups.items():
                have = dict(den)
                cof = tuple(sorted((n, m - have.get(n, 0)) for n, m in common.items() if m > have.get(n, 0)))
                num = num + part * factors_product(cof)
            total = QRational(num, tuple(sorted(common.items())))
        else:
            for (den, residual), part in groups.items():
                total = total + QRational(part, den, residual)
        return total.reduced()

    # normalization

    def reduced(self) -> "QRational":
        """Cancel every common factor of numerator and denominator."""
        if self.is_zero():
            return QRational()
        num = self.num
        den = []
        for n, m in self.den:
            phi = cyclotomic(n)
            while m > 0:
                quot, rem = num.divmod_monic(phi)
                if not rem.is_zero():
                    break
                num = quot
                m -= 1
            if m:
                den.append((n, m))
        residual = self.residual
        if residual != ONE:
            g = _residual_gcd(num, residual)
            if len(g.coeffs) > 1:
                num = _exact_div(num, g)[0]
                residual = _exact_div(residual, g)[0]
                c, residual = residual.content()
                num = num.scale(Fraction(1) / c)
        return QRational(num, tuple(den), residual)

    # evaluation

    def limit_at_one(self) -> Fraction:
        """
        Exact value at t = 1.

        Raises:
            PoleError: If the function has a pole at t = 1
        """
        if self.is_zero():
            return Fraction(0)
        num, zeros = self.num, 0
        while num.value_at_one() == 0:
            num = num.divide_by_t_minus_one()
            zeros += 1
        poles = dict(self.den).get(1, 0)
        residual = self.residual
        while residual.value_at_one() == 0:
            residual = residual.divide_by_t_minus_one()
            poles += 1
        if poles > zeros:
            raise PoleError(poles - zeros)
        if zeros > poles:
            return Fraction(0)
        den = Fraction(residual.value_at_one())
        for n, m in self.den:
            if n > 1:
                den *= cyclotomic_at_one(n) ** m
        return Fraction(num.value_at_one()) / den

    def substitute(self, k: int) -> "QRational":
        """
        t -> t^k, the multi-cover change of variable q -> q^k.

        Args:
            k: nonzero integer; negative k also inverts t
        """
        if k == 0:
            raise QRationalError("substitution exponent must be nonzero")
        if k < 0:
            return self.invert().substitute(-k)
        if k == 1 or self.is_zero():
            return self
        counts = Counter(dict(self.den))
        for p, e in factorint(k).items():
            for _ in range(e):
                nxt: Counter = Counter()
                for n, m in counts.items():
                    nxt[n * p] += m
                    if n % p:
                        nxt[n] += m
                counts = nxt
        return QRational(
            self.num.substitute_power(k),
            tuple(sorted(counts.items())),
            self.residual.substitute_power(k),
        )

    def invert(self) -> "QRational":
        """t -> 1/t."""
        if self.is_zero():
            return self
        degree = sum(m * (len(cyclotomic(n)) - 1) for n, m in self.den)
        sign = -1 if dict(self.den).get(1, 0) % 2 else 1
        num = self.num.reflect().shift(degree).scale(sign)
        residual = self.residual
        if residual != ONE:
            num = num.shift(residual.high)
            residual = residual.reflect().shift(residual.high)
            if residual.coeffs[-1] < 0:
                residual, num = -residual, -num
        return QRational(num, self.den, residual)

    def series(self, order: int) -> LaurentPoly:
        """
        Expansion around t = 0, keeping exponents below order.

        Args:
            order: truncation exponent

        Returns:
            Laurent polynomial of the kept terms
        """
        if self.is_zero():
            return ZERO
        length = order - self.num.low
        if length <= 0:
            return ZERO
        den = self.denominator().coeffs
        # 1/d0 equals d0 for the unit constant terms of cyclotomic products
        inv0 = den[0] if den[0] in (1, -1) else Fraction(1, den[0])
        inverse: List[Coefficient] = [0] * length
        inverse[0] = inv0
        for k in range(1, length):
            acc = 0
            for j in range(1, min(k, len(den) - 1) + 1):
                acc += den[j] * inverse[k - j]
            inverse[k] = -acc * inv0
        terms: Dict[int, Coefficient] = {}
        for e, c in self.num.items():
            for k in range(order - e):
                if k >= length:
                    break
                if inverse[k]:
                    terms[e + k] = terms.get(e + k, 0) + c * inverse[k]
        return LaurentPoly.from_dict(terms)


def _residual_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Primitive gcd of the polynomial parts of two Laurent polynomials."""
    g = _from_sympy(poly_gcd(_to_sympy(p), _to_sympy(q)))
    return g.content()[1]


def _exact_div(p: LaurentPoly, q: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """Exact polynomial division over QQ through sympy."""
    quot, rem = _to_sympy(p.shift(-p.low)).div(_to_sympy(q.shift(-q.low)))
    return _from_sympy(quot, p.low - q.low), _from_sympy(rem, p.low)


@dataclass(frozen=True)
class QSeriesCap:
    """
    A QRational with an optional truncation order.

    Without an order, comparison is exact; with one, both sides are
    expanded around t = 0 and compared below that exponent.
    """

    value: QRational
    order: Optional[int] = None

    def matches(self, other: Union["QSeriesCap", QRational, LaurentPoly]) -> bool:
        if isinstance(other, QSeriesCap):
            order = min(o for o in (self.order, other.order) if o is not None) \
                if (self.order is not None or other.order is not None) else None
            other = other.value
        else:
            order = self.order
        if isinstance(other, LaurentPoly):
            if order is None:
                return self.value == QRational(other)
            return self.value.series(order) == LaurentPoly.from_dict(
                {e: c for e, c in other.items() if e < order})
        if order is None:
            return self.value == other
        return self.value.series(order) == other.series(order)


def qrational_arith(op: str, left, right=None):
    """
    Dispatch of the exact field operations by name.

    Args:
        op: one of add, mul, div, negate, substitute
        left: first operand
        right: second operand, or the exponent k for substitute
    """
    left = QRational.coerce(left)
    if op == "add":
        return (left + right).reduced()
    if op == "mul":
        return (left * QRational.coerce(right)).reduced()
    if op == "div":
        return left / right
    if op == "negate":
        return -left
    if op == "substitute":
        return left.substitute(int(right))
    raise QRationalError(f"unknown operation {op!r}")
