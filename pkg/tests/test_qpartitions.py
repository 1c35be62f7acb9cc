import random
from fractions import Fraction

import pytest
from sympy import simplify, symbols

from src.qpartitions import (
    LaurentPoly,
    QRational,
    QSeriesCap,
    complete_homogeneous,
    conjugate,
    elementary_symmetric,
    hooks,
    kappa,
    limit_at_one,
    partitions_of,
    partitions_up_to,
    qrational_arith,
    schur_principal,
    skew_schur_specialized,
)
from src.qpartitions.partitions import as_partition, contains, sub_partitions
from src.utils.errors import PoleError, QRationalError

T = LaurentPoly.monomial(1, 1)
ONE = QRational.monomial(1)


def one_minus(k):
    return QRational.one_minus_t_power(k)


# partitions

def test_conjugate_and_kappa():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(conjugate((4, 2, 2, 1))) == (4, 2, 2, 1)
    assert kappa((2,)) == 2
    assert kappa((1, 1)) == -2
    for lam in partitions_up_to(8):
        assert kappa(lam) + kappa(conjugate(lam)) == 0


def test_hooks():
    assert hooks((2, 1)) == (3, 1, 1)
    assert sorted(hooks((3, 2))) == [1, 1, 2, 3, 4]


def test_enumeration():
    assert len(partitions_of(4)) == 5
    assert partitions_of(3) == ((3,), (2, 1), (1, 1, 1))
    assert len(list(partitions_up_to(3))) == 7
    assert len(sub_partitions((2, 1))) == 5
    assert all(contains((2, 1), eta) for eta in sub_partitions((2, 1)))


def test_as_partition():
    assert as_partition((3, 1, 0)) == (3, 1)
    with pytest.raises(ValueError):
        as_partition((1, 2))


# Laurent polynomials

def test_laurent_arithmetic():
    p = LaurentPoly((1, 1))
    q = LaurentPoly((1, -1))
    assert p * q == LaurentPoly.from_dict({0: 1, 2: -1})
    assert (p - p).is_zero()
    assert LaurentPoly((0, 0, 3, 0), -2) == LaurentPoly.monomial(3, 0)
    assert LaurentPoly((1, 2), -1).reflect() == LaurentPoly((2, 1), 0)
    assert p.substitute_power(3) == LaurentPoly.from_dict({0: 1, 3: 1})


def test_divide_by_t_minus_one():
    p = LaurentPoly.from_dict({0: -1, 3: 1})
    assert p.divide_by_t_minus_one() == LaurentPoly((1, 1, 1))
    with pytest.raises(ArithmeticError):
        LaurentPoly((1, 1)).divide_by_t_minus_one()


# rational functions

def test_common_denominators():
    a = ONE / one_minus(1)
    b = QRational(T) / one_minus(1)
    assert a - b == ONE
    assert one_minus(2) / one_minus(1) == QRational(LaurentPoly((1, 1)))
    assert QRational.inverse_product([2], T) == QRational(T) / one_minus(2)


def test_sum_matches_pairwise_addition():
    terms = [QRational.inverse_product([k], LaurentPoly.monomial(k, k)) for k in range(1, 6)]
    pairwise = QRational()
    for term in terms:
        pairwise = pairwise + term
    assert QRational.sum(terms) == pairwise


RESIDUALS = ([2, -1], [3, 1], [1, 0, 2])


def random_qrational(rng):
    numerator = LaurentPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))], rng.randint(-2, 2))
    value = QRational.inverse_product([rng.randint(1, 4) for _ in range(rng.randint(0, 2))], numerator)
    if rng.random() < 0.4:
        value = value / QRational.from_coefficients(rng.choice(RESIDUALS))
    return value


def test_field_laws_on_random_elements():
    rng = random.Random(5)
    for _ in range(40):
        a, b, c = (random_qrational(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()


def test_non_cyclotomic_denominator():
    f = ONE / QRational.from_coefficients([2, -1])
    assert f * QRational.from_coefficients([2, -1]) == ONE
    assert f.limit_at_one() == 1
    assert f.series(3) == LaurentPoly((Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)))


def test_division_by_zero():
    with pytest.raises(QRationalError):
        ONE / QRational()
    with pytest.raises(QRationalError):
        ONE / 0


def test_limit_at_one():
    weight = QRational(LaurentPoly.from_dict({-2: 1, 0: -2, 2: 1}))
    f = QRational.inverse_product([2, 2], LaurentPoly.monomial(1, 2))
    assert limit_at_one(weight * f) == 1
    assert limit_at_one(QRational.inverse_product([2], LaurentPoly.from_dict({0: 1, 2: -1}))) == 1
    assert limit_at_one(QRational.from_coefficients([0, 1, -1])) == 0
    with pytest.raises(PoleError) as info:
        limit_at_one(f)
    assert info.value.order == 2


def test_substitute():
    f = ONE / one_minus(1)
    assert f.substitute(2) == ONE / one_minus(2)
    g = QRational.inverse_product([2], T)
    assert g.substitute(-1) == -g
    h = QRational.inverse_product([2, 3], LaurentPoly.from_dict({1: 2, 4: -1}))
    assert h.substitute(6) == QRational.inverse_product([12, 18], LaurentPoly.from_dict({6: 2, 24: -1}))
    with pytest.raises(QRationalError):
        f.substitute(0)


def test_series():
    assert (ONE / one_minus(1)).series(4) == LaurentPoly((1, 1, 1, 1))
    assert QRational.inverse_product([2], LaurentPoly.monomial(1, -1)).series(4) == LaurentPoly((1, 0, 1, 0, 1), -1)


def test_series_cap():
    f = ONE / one_minus(1)
    assert QSeriesCap(f, 3).matches(LaurentPoly((1, 1, 1, 5)))
    assert not QSeriesCap(f).matches(LaurentPoly((1, 1, 1)))
    assert QSeriesCap(f).matches(QSeriesCap(f.substitute(1)))


def test_qrational_arith():
    f = ONE / one_minus(1)
    assert qrational_arith("add", f, f) == f * 2
    assert qrational_arith("mul", f, one_minus(1)) == ONE
    assert qrational_arith("negate", f) == -f
    assert qrational_arith("substitute", f, 2) == ONE / one_minus(2)
    with pytest.raises(QRationalError, match="unknown operation"):
        qrational_arith("pow", f, 2)


def test_to_expr():
    t = symbols("t")
    assert simplify(QRational.inverse_product([1], T).to_expr() - t / (1 - t)) == 0


# Schur functions

def test_principal_specialization():
    assert schur_principal((1,)) == QRational.inverse_product([2], T)
    assert schur_principal((2,)) == QRational.inverse_product([2, 4], LaurentPoly.monomial(1, 2))
    assert schur_principal((1, 1)) == QRational.inverse_product([2, 4], LaurentPoly.monomial(1, 4))
    assert schur_principal(()) == ONE


def test_generating_functions():
    assert complete_homogeneous(2) == schur_principal((2,))
    assert elementary_symmetric(2) == schur_principal((1, 1))
    assert complete_homogeneous(-1).is_zero()
    shifted = QRational(LaurentPoly.monomial(1, -1)) + QRational.inverse_product([2], LaurentPoly.monomial(1, 3))
    assert complete_homogeneous(1, (1,)) == shifted


def test_skew_schur():
    h1 = complete_homogeneous(1)
    assert skew_schur_specialized((2, 1), (1,)) == h1 * h1
    assert skew_schur_specialized((2, 1), (2, 1), (3,)) == ONE
    assert skew_schur_specialized((2, 1)) == schur_principal((2, 1))
    with pytest.raises(QRationalError, match="not contained"):
        skew_schur_specialized((1,), (2,))


def test_skew_schur_uses_either_jacobi_trudi_form():
    # (1,1,1) goes through the e-form, (3,) through the h-form
    assert skew_schur_specialized((1, 1, 1), (), (1,)) == elementary_symmetric(3, (1,))
    assert skew_schur_specialized((3,), (), (1,)) == complete_homogeneous(3, (1,))
