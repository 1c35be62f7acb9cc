"""
Shared fans and fan documents.
"""

import json

import pytest

from src.homology.classes import CurveClass
from src.lattice.fan import Fan

from tests.fans import (
    CONIFOLD_CONES,
    CONIFOLD_RAYS,
    KF1_CONES,
    KF1_E,
    KF1_F,
    KF1_RAYS,
    KP2_CONES,
    KP2_LINE,
    KP2_RAYS,
    P3_CONES,
    P3_RAYS,
)


@pytest.fixture
def conifold() -> Fan:
    return Fan(CONIFOLD_RAYS, CONIFOLD_CONES)


@pytest.fixture
def kp2() -> Fan:
    return Fan(KP2_RAYS, KP2_CONES)


@pytest.fixture
def kf1() -> Fan:
    return Fan(KF1_RAYS, KF1_CONES)


@pytest.fixture
def p3() -> Fan:
    return Fan(P3_RAYS, P3_CONES)


@pytest.fixture
def line() -> CurveClass:
    return CurveClass(KP2_LINE)


@pytest.fixture
def kf1_basis():
    return {"e": KF1_E, "f": KF1_F}


def write_fan(directory, name, rays, cones, classes=None):
    document = {"rays": [list(r) for r in rays], "cones": [list(c) for c in cones]}
    if classes:
        document["classes"] = {k: list(v) for k, v in classes.items()}
    path = directory / name
    path.write_text(json.dumps(document, indent=2))
    return str(path)


@pytest.fixture
def kp2_document(tmp_path):
    return write_fan(tmp_path, "kp2.json", KP2_RAYS, KP2_CONES, {"l": KP2_LINE})


@pytest.fixture
def kf1_document(tmp_path):
    return write_fan(tmp_path, "kf1.json", KF1_RAYS, KF1_CONES, {"e": KF1_E, "f": KF1_F})


@pytest.fixture
def conifold_document(tmp_path):
    return write_fan(tmp_path, "conifold.json", CONIFOLD_RAYS, CONIFOLD_CONES)


@pytest.fixture
def p3_document(tmp_path):
    return write_fan(tmp_path, "p3.json", P3_RAYS, P3_CONES)
