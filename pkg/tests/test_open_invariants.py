import logging

import pytest

from src.homology import CurveClass
from src.lattice.fan import Fan
from src.utils.errors import DegreeCapError, QueryError
from src.vertex import ALL_FIXED_POINTS, OpenInvariantQuery, ledger_hash, open_gw, open_gw_values
from src.vertex.open_invariants import closed_invariant, transported_chain
from src.surgery import open_invariant_surgery

from tests.fans import KF1_E, KF1_F, KP2_LINE

LINE = CurveClass(KP2_LINE)
LOCAL_F2_RAYS = ((0, 0, 1), (1, 0, 1), (0, 1, 1), (-1, 2, 1), (0, -1, 1))
LOCAL_F2_CONES = ((0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 1, 4))


def test_query_validation(kp2):
    with pytest.raises(QueryError, match="nonzero"):
        OpenInvariantQuery(kp2, 0, CurveClass((0, 0, 0, 0))).validated()
    with pytest.raises(QueryError, match="not a compact divisor ray"):
        OpenInvariantQuery(kp2, 2, LINE).validated()
    with pytest.raises(QueryError, match="not a curve class"):
        OpenInvariantQuery(kp2, 0, CurveClass((1, 0, 0, 0))).validated()


def test_fixed_point_selection(kp2):
    assert OpenInvariantQuery(kp2, 0, LINE).fixed_points() == ((1, 2), (1, 3), (2, 3))
    assert OpenInvariantQuery(kp2, 0, LINE, (3, 2)).fixed_points() == ((2, 3),)


def test_transported_chain(kp2):
    _, trace = open_invariant_surgery(kp2, 0, (1, 2))
    chain, h = transported_chain(kp2, 0, 2 * LINE, trace)
    assert h == CurveClass((1, 0, 0, 0, 1))
    assert chain[0] == CurveClass((-5, 2, 2, 2, 1))
    assert chain[-1] == CurveClass(KF1_E) + 2 * CurveClass(KF1_F)


def test_basic_disc_of_local_p2(kp2):
    result = open_gw(OpenInvariantQuery(kp2, 0, LINE))
    assert result.values == (-2, -2, -2)
    assert result.value == -2
    assert result.fano
    assert all(r.cap == 1 for r in result.results)
    assert result.results[0].alpha_prime == CurveClass(KF1_F)


def test_single_fixed_point(kp2):
    assert open_gw_values(kp2, 0, KP2_LINE, (1, 3)) == (-2,)


def test_result_document(kp2):
    result = open_gw(OpenInvariantQuery(kp2, 0, LINE, (1, 2)))
    document = result.to_document()
    assert document["divisor"] == 0
    assert document["alpha"] == list(KP2_LINE)
    assert document["fano"] is True
    (entry,) = document["fixed_points"]
    assert entry["fixed_point"] == [1, 2]
    assert entry["invariant"] == -2
    assert entry["alpha_prime"] == list(KF1_F)
    assert entry["convention_ledger"] == ledger_hash()
    assert entry["steps"][0]["classes"]["fiber"] == [1, 0, 0, 0, 1]
    assert [s["kind"] for s in entry["steps"]] == ["compactify", "blowup", "flop", "remove_ray"]


def test_cap_too_small(kp2):
    with pytest.raises(DegreeCapError, match="increase degree cap"):
        open_gw(OpenInvariantQuery(kp2, 0, 2 * LINE, (1, 2)), cap=1)


def test_class_outside_the_web_cone_is_zero(kf1):
    value, cap = closed_invariant(kf1, -CurveClass(KF1_E))
    assert (value, cap) == (0, 0)


def test_all_is_the_default_choice(kp2):
    assert OpenInvariantQuery(kp2, 0, LINE).fixed_point == ALL_FIXED_POINTS


def test_non_fano_divisor_gets_an_advisory(caplog):
    f2 = Fan(LOCAL_F2_RAYS, LOCAL_F2_CONES)
    fiber = CurveClass((-2, 0, 1, 0, 1))
    with caplog.at_level(logging.WARNING, logger="src"):
        result = open_gw(OpenInvariantQuery(f2, 0, fiber, (1, 2)))
    assert not result.fano
    assert result.results[0].alpha_prime == CurveClass((-1, -1, 0, 0, 1, 1))
    assert "not a Fano surface" in caplog.text
