"""
Published genus-zero numbers of local P2 and local F1, closed and open.
"""

import pytest

from src.vertex import gw_table, open_gw_values

from tests.fans import KF1_F, KP2_LINE

KF1_CAP_FIVE = {(1, 3): 7, (2, 2): -6, (2, 3): -32}
KF1_CAP_SEVEN = {(3, 3): 27, (2, 4): -110, (3, 4): 286}


def _alpha(k):
    return tuple(k * x for x in KP2_LINE)


@pytest.mark.slow
def test_local_f1_table_at_cap_five(kf1, kf1_basis):
    table = gw_table(kf1, kf1_basis, cap=5)
    for coords, value in KF1_CAP_FIVE.items():
        assert table[coords] == value


@pytest.mark.slow
def test_local_f1_table_at_cap_seven(kf1, kf1_basis):
    table = gw_table(kf1, kf1_basis, cap=7, workers=4)
    for coords, value in {**KF1_CAP_FIVE, **KF1_CAP_SEVEN}.items():
        assert table[coords] == value


@pytest.mark.slow
def test_local_p2_cubic_invariant(kp2):
    table = gw_table(kp2, {"l": KP2_LINE}, cap=3)
    assert table[(3,)] == 27


@pytest.mark.slow
@pytest.mark.parametrize("k,value", [(2, 5), (3, -32)])
def test_open_local_p2(kp2, k, value):
    assert open_gw_values(kp2, 0, _alpha(k)) == (value, value, value)


@pytest.mark.slow
def test_open_local_p2_degree_four(kp2):
    assert open_gw_values(kp2, 0, _alpha(4), (1, 2)) == (286,)


@pytest.mark.extended
def test_open_local_p2_degree_five(kp2):
    assert open_gw_values(kp2, 0, _alpha(5), (1, 2), workers=4) == (-3038,)


@pytest.mark.slow
def test_open_local_f1_is_choice_independent(kf1):
    values = open_gw_values(kf1, 0, KF1_F)
    assert len(values) == 4
    assert len(set(values)) == 1

