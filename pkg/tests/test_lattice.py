import random

import numpy as np
import pytest

from src.lattice import linalg
from src.lattice.fan import (
    Fan,
    compact_divisor_rays,
    cy_vector,
    divisor_fan_generators,
    fans_equivalent,
    height_one_polygon,
    is_calabi_yau,
    is_fano_surface,
    primitive,
    random_unimodular,
    validate_fan,
)
from src.utils.errors import FanError, NotCalabiYauError

LOCAL_F2_RAYS = ((0, 0, 1), (1, 0, 1), (0, 1, 1), (-1, 2, 1), (0, -1, 1))
LOCAL_F2_CONES = ((0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 1, 4))


# linalg

def test_exgcd_row_operation():
    for a, b in [(12, 18), (-7, 3), (0, 5), (4, 0), (6, -4)]:
        M = linalg.exgcd(a, b)
        top, bottom = M.dot(np.array([a, b], dtype=object))
        assert bottom == 0
        assert abs(top) == np.gcd(a, b)
        assert M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0] == 1


def test_normal_form_reconstructs_matrix():
    A = linalg.as_int_matrix([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    S, D, T, Sinv, Tinv = linalg.normal_form(A)
    assert (S.dot(D).dot(T) == A).all()
    assert (S.dot(Sinv) == np.eye(3, dtype=object)).all()
    assert (T.dot(Tinv) == np.eye(3, dtype=object)).all()
    assert all(D[i, j] == 0 for i in range(3) for j in range(3) if i != j)


def test_kernel_and_rank(kp2):
    A = kp2.ray_matrix
    K = linalg.kernel(A)
    assert K.shape == (4, 1)
    assert (A.dot(K) == 0).all()
    assert linalg.rank(A) == 3


def test_solve_integer():
    A = linalg.as_int_matrix([[2, 0], [0, 3], [1, 1]])
    assert list(linalg.solve_integer(A, [4, 9, 5])) == [2, 3]
    assert linalg.solve_integer(A, [1, 0, 0]) is None


def test_complete_to_basis():
    for v in [(0, 0, 1), (2, 3, 5), (-1, -1, 1), (6, 10, 15)]:
        M = linalg.complete_to_basis(v)
        assert tuple(M[0]) == v
        assert linalg.det3(M) == 1
    with pytest.raises(ValueError):
        linalg.complete_to_basis((2, 4, 6))


def test_hermite_rows_is_canonical():
    rows = [[3, -1, -1, -1, 0], [1, 0, 0, -1, 0]]
    H = linalg.hermite_rows(rows)
    same_lattice = linalg.hermite_rows([[4, -1, -1, -2, 0], [-1, 0, 0, 1, 0]])
    assert (H == same_lattice).all()
    assert H[0, 0] > 0


# fans

def test_primitive():
    assert primitive((2, 4, -6)) == (1, 2, -3)
    with pytest.raises(FanError, match="zero vector has no primitive representative"):
        primitive((0, 0, 0))


@pytest.mark.parametrize("fixture", ["conifold", "kp2", "kf1", "p3"])
def test_known_fans_are_valid_and_smooth(fixture, request):
    report = validate_fan(request.getfixturevalue(fixture))
    assert report.is_valid
    assert report.is_smooth


def test_duplicate_ray_is_reported():
    fan = Fan(((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 0, 1)), ((0, 1, 2), (0, 2, 3)))
    report = validate_fan(fan)
    assert not report.is_valid
    assert any("duplicates" in v for v in report.violations)


def test_overlapping_cones_are_reported():
    fan = Fan(((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)), ((0, 1, 2), (0, 1, 3)))
    report = validate_fan(fan)
    assert any("common face" in v for v in report.violations)


def test_non_primitive_and_degenerate():
    fan = Fan(((0, 0, 2), (1, 0, 1), (2, 0, 2)), ((0, 1, 2),))
    report = validate_fan(fan)
    assert any("not primitive" in v for v in report.violations)
    assert any("degenerate" in v for v in report.violations)
    assert any("do not span N" in v for v in report.violations)


def test_non_smooth_cone_is_valid_but_flagged():
    fan = Fan(((0, 0, 1), (2, 1, 1), (1, 2, 1)), ((0, 1, 2),))
    report = validate_fan(fan)
    assert report.is_valid
    assert not report.is_smooth
    assert report.determinants[0] in (3, -3)


@pytest.mark.parametrize("fixture", ["conifold", "kp2", "kf1", "p3"])
def test_validation_and_compact_divisors_are_gl3_invariant(fixture, request):
    fan = request.getfixturevalue(fixture)
    report = validate_fan(fan)
    rng = random.Random(23)
    for _ in range(5):
        moved = fan.transform(random_unimodular(rng))
        moved_report = validate_fan(moved)
        assert moved_report.is_valid == report.is_valid
        assert moved_report.smooth == report.smooth
        assert [abs(d) for d in moved_report.determinants] == [abs(d) for d in report.determinants]
        assert compact_divisor_rays(moved) == compact_divisor_rays(fan)


def test_invalid_fans_stay_invalid_under_gl3():
    fan = Fan(((0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)), ((0, 1, 2), (0, 1, 3)))
    rng = random.Random(29)
    for _ in range(5):
        report = validate_fan(fan.transform(random_unimodular(rng)))
        assert any("common face" in v for v in report.violations)


def test_cy_vector(kp2, kf1):
    assert cy_vector(kp2).nu == (0, 0, 1)
    assert cy_vector(kf1).nu == (0, 0, 1)


def test_cy_vector_is_gl3_covariant(kf1):
    rng = random.Random(7)
    for _ in range(5):
        M = random_unimodular(rng)
        moved = kf1.transform(M)
        nu = cy_vector(moved).nu
        assert all(linalg.dot(nu, r) == 1 for r in moved.rays)


def test_not_calabi_yau(p3):
    with pytest.raises(NotCalabiYauError, match="fan is not Calabi-Yau"):
        cy_vector(p3)
    assert not is_calabi_yau(p3)


def test_compact_divisors(conifold, kp2, kf1):
    assert compact_divisor_rays(conifold) == frozenset()
    assert compact_divisor_rays(kp2) == frozenset({0})
    assert compact_divisor_rays(kf1) == frozenset({0})


def test_walls(kp2, kf1, conifold):
    assert len(kp2.compact_walls) == 3 and len(kp2.boundary_walls) == 3
    assert len(kf1.compact_walls) == 4 and len(kf1.boundary_walls) == 4
    assert len(conifold.compact_walls) == 1 and len(conifold.boundary_walls) == 4
    assert sorted(kp2.apexes((0, 1))) == [2, 3]
    with pytest.raises(FanError):
        kf1.apexes((1, 2))


def test_height_one_polygon(kf1):
    polygon = height_one_polygon(kf1, cy_vector(kf1))
    assert len(polygon.points) == 5
    for triangle in polygon.triangles:
        assert abs(polygon.doubled_area(triangle)) == 1
        assert polygon.doubled_area(polygon.ccw(triangle)) == 1


def test_fano_divisors(kp2, kf1):
    assert is_fano_surface(kp2, 0)
    assert is_fano_surface(kf1, 0)
    assert len(divisor_fan_generators(kf1, 0)) == 4


def test_local_f2_divisor_is_not_fano():
    fan = Fan(LOCAL_F2_RAYS, LOCAL_F2_CONES)
    assert validate_fan(fan).is_smooth
    assert not is_fano_surface(fan, 0)


def test_fano_needs_a_compact_divisor(kp2):
    with pytest.raises(FanError):
        is_fano_surface(kp2, 1)


def test_normal_form_detects_equivalence(kf1, kp2):
    rng = random.Random(11)
    for _ in range(3):
        moved = kf1.transform(random_unimodular(rng))
        assert fans_equivalent(kf1, moved)
    assert not fans_equivalent(kf1, kp2)
