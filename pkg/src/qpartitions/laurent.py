"""
Laurent polynomials in t with exact rational coefficients.
Stored densely as an exponent offset plus a coefficient tuple.
"""

from fractions import Fraction
from math import gcd
from typing import Dict, Iterator, List, Sequence, Tuple, Union

Coefficient = Union[int, Fraction]


def _clean(c: Coefficient) -> Coefficient:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """
    Immutable Laurent polynomial sum_k coeffs[k] * t^(low + k).

    The coefficient tuple never has zero ends; the zero polynomial has an
    empty tuple and low = 0.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Sequence[Coefficient] = (), low: int = 0):
        coeffs = list(coeffs)
        start = 0
        while start < len(coeffs) and coeffs[start] == 0:
            start += 1
        end = len(coeffs)
        while end > start and coeffs[end - 1] == 0:
            end -= 1
        if start == end:
            object.__setattr__(self, "low", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "low", low + start)
            object.__setattr__(self, "coeffs", tuple(_clean(c) for c in coeffs[start:end]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    def __reduce__(self):
        return (LaurentPoly, (self.coeffs, self.low))

    @classmethod
    def monomial(cls, coefficient: Coefficient = 1, exponent: int = 0) -> "LaurentPoly":
        return cls((coefficient,), exponent)

    @classmethod
    def from_dict(cls, terms: Dict[int, Coefficient]) -> "LaurentPoly":
        terms = {e: c for e, c in terms.items() if c != 0}
        if not terms:
            return cls()
        low, high = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(low, high + 1)], low)

    @property
    def high(self) -> int:
        """Largest exponent (low - 1 for the zero polynomial)."""
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def coefficient(self, exponent: int) -> Coefficient:
        k = exponent - self.low
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def items(self) -> Iterator[Tuple[int, Coefficient]]:
        for k, c in enumerate(self.coeffs):
            if c:
                yield self.low + k, c

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.monomial(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.low, self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in self.items())

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.monomial(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for k, c in enumerate(self.coeffs):
            out[self.low - low + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.low - low + k] += c
        return LaurentPoly(out, low)

    __radd__ = __add__

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def scale(self, factor: Coefficient) -> "LaurentPoly":
        if factor == 0:
            return LaurentPoly()
        return LaurentPoly([c * factor for c in self.coeffs], self.low)

    def shift(self, exponent: int) -> "LaurentPoly":
        """Multiply by t^exponent."""
        if self.is_zero():
            return self
        return LaurentPoly(self.coeffs, self.low + exponent)

    def value_at_one(self) -> Coefficient:
        return _clean(sum(self.coeffs))

    def divide_by_t_minus_one(self) -> "LaurentPoly":
        """
        Exact quotient by (t - 1).

        Raises:
            ArithmeticError: If t = 1 is not a root
        """
        if self.value_at_one() != 0:
            raise ArithmeticError("t - 1 does not divide the polynomial")
        # Synthetic division from the top coefficient down.
        out = [0] * (len(self.coeffs) - 1)
        carry = 0
        for k in range(len(self.coeffs) - 1, 0, -1):
            carry += self.coeffs[k]
            out[k - 1] = carry
        return LaurentPoly(out, self.low)

    def divmod_monic(self, divisor: Sequence[int]) -> Tuple["LaurentPoly", "LaurentPoly"]:
        """
        Division by a monic polynomial given low-to-high.

        The Laurent offset is carried by the quotient.

        Returns:
            (quotient, remainder) with self = quotient * divisor + remainder
        """
        d = len(divisor) - 1
        rem = list(self.coeffs)
        if len(rem) <= d:
            return LaurentPoly(), self
        quot = [0] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c:
                quot[k - d] = c
                for j in range(d + 1):
                    rem[k - d + j] -= c * divisor[j]
        return LaurentPoly(quot, self.low), LaurentPoly(rem[:d], self.low)

    def substitute_power(self, k: int) -> "LaurentPoly":
        """t -> t^k for k >= 1."""
        if self.is_zero() or k == 1:
            return self
        out = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return LaurentPoly(out, self.low * k)

    def reflect(self) -> "LaurentPoly":
        """t -> 1/t."""
        if self.is_zero():
            return self
        return LaurentPoly(self.coeffs[::-1], -self.high)

    def content(self) -> Tuple[Coefficient, "LaurentPoly"]:
        """
        Split off a rational content so the rest has coprime integer coefficients
        and a positive leading coefficient.

        Returns:
            (content, primitive part)
        """
        if self.is_zero():
            return 0, self
        denominators = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                denominators = denominators * c.denominator // gcd(denominators, c.denominator)
        ints = [int(c * denominators) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if ints[-1] < 0:
            g = -g
        primitive = LaurentPoly([c // g for c in ints], self.low)
        return _clean(Fraction(g, denominators)), primitive

    def series(self, order: int) -> List[Coefficient]:
        """Coefficients of t^0 .. t^(order-1) (negative exponents must be absent)."""
        return [self.coefficient(e) for e in range(order)]


ZERO = LaurentPoly()
ONE = LaurentPoly.monomial(1)
