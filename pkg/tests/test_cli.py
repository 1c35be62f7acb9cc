import io
import json

import pytest

from src import __version__
from src.cli import main

from tests.conftest import write_fan


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


# check

def test_check_local_p2(kp2_document):
    code, out, _ = run(["check", kp2_document])
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "valid smooth fan"
    assert "CY vector: [0, 0, 1]" in lines
    assert "compact divisors: [0]" in lines
    assert "class l: [-3, 1, 1, 1]" in lines
    assert lines[-1] == "valid; CY; 1 compact divisor"


def test_check_conifold(conifold_document):
    code, out, _ = run(["check", conifold_document])
    assert code == 0
    assert out.splitlines()[-1] == "valid; CY; 0 compact divisors"


def test_check_not_calabi_yau(p3_document):
    code, out, _ = run(["check", p3_document])
    assert code == 1
    assert out.splitlines()[-1] == "valid fan; not Calabi-Yau"


def test_check_invalid_fan(tmp_path):
    path = write_fan(tmp_path, "dup.json", [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 0, 1)], [(0, 1, 2), (0, 2, 3)])
    code, out, _ = run(["check", path])
    assert code == 1
    assert out.splitlines()[0] == "invalid fan"
    assert out.splitlines()[-1] == "invalid fan"


def test_check_non_smooth(tmp_path):
    path = write_fan(tmp_path, "cone.json", [(0, 0, 1), (2, 1, 1), (1, 2, 1)], [(0, 1, 2)])
    code, out, _ = run(["check", path])
    assert code == 1
    assert "  cone 0: not smooth, |det| = 3" in out.splitlines()
    assert out.splitlines()[-1] == "valid; CY; not smooth; 0 compact divisors"


def test_check_bad_class(tmp_path):
    path = write_fan(tmp_path, "bad.json", [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1)],
                     [(0, 1, 3), (0, 2, 3)], {"c": (1, 0, 0, 0)})
    code, _, err = run(["check", path])
    assert code == 1
    assert "not a curve class" in err


def test_malformed_json_reports_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{\n  "rays": [[0, 0, 1],\n')
    code, _, err = run(["check", str(path)])
    assert code == 2
    assert "line 3" in err
    assert "DocumentError" in err


def test_missing_file(tmp_path):
    code, _, err = run(["check", str(tmp_path / "absent.json")])
    assert code == 2
    assert "cannot read" in err


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out


# gw

def test_gw_csv(kp2_document):
    code, out, _ = run(["gw", kp2_document, "--basis", "l", "--cap", "2"])
    assert code == 0
    assert out == "l,invariant\n1,3\n2,-6\n"


def test_gw_is_deterministic(kf1_document):
    first = run(["gw", kf1_document, "--cap", "2"])[1]
    second = run(["gw", kf1_document, "--cap", "2"])[1]
    assert first == second
    assert first.splitlines()[0] == "e,f,invariant"


def test_gw_cap_zero_has_only_a_header(kp2_document):
    assert run(["gw", kp2_document, "--cap", "0"])[1] == "l,invariant\n"


def test_gw_outputs(kp2_document, tmp_path):
    csv_path = tmp_path / "table.csv"
    json_path = tmp_path / "table.json"
    assert run(["gw", kp2_document, "--cap", "1", "--out", str(csv_path)])[0] == 0
    assert run(["gw", kp2_document, "--cap", "1", "--out", str(json_path)])[0] == 0
    assert csv_path.read_text() == "l,invariant\n1,3\n"
    document = json.loads(json_path.read_text())
    assert document["invariants"] == [{"class": [1], "kernel_vector": [-3, 1, 1, 1], "invariant": 3}]


def test_gw_unknown_basis_name(kp2_document):
    code, _, err = run(["gw", kp2_document, "--basis", "h"])
    assert code == 1
    assert "unknown class name" in err


def test_gw_without_named_classes(conifold_document):
    code, out, _ = run(["gw", conifold_document, "--cap", "2"])
    assert code == 0
    assert out == "b0,invariant\n1,1\n2,0\n"


# open and pipeline

def test_open_local_p2(kp2_document, tmp_path):
    trace = tmp_path / "trace.json"
    code, out, _ = run(["open", kp2_document, "--divisor", "0", "--alpha", "1", "--trace", str(trace)])
    assert code == 0
    lines = out.splitlines()
    assert lines[:3] == ["fixed point [1, 2]: -2", "fixed point [1, 3]: -2", "fixed point [2, 3]: -2"]
    assert lines[3] == "advisory: compact divisor 0 is a Fano surface"
    document = json.loads(trace.read_text())
    assert len(document["fixed_points"]) == 3


def test_open_single_fixed_point(kp2_document):
    code, out, _ = run(["open", kp2_document, "--divisor", "0", "--alpha", "1", "--fixed-point", "1", "--trace", ""])
    assert code == 0
    assert out.splitlines()[0] == "fixed point [1, 3]: -2"


def test_open_writes_no_trace_unless_asked(kp2_document, tmp_path, monkeypatch):
    workdir = tmp_path / "work"
    workdir.mkdir()
    monkeypatch.chdir(workdir)
    code, out, _ = run(["open", kp2_document, "--divisor", "0", "--alpha", "1", "--fixed-point", "0"])
    assert code == 0
    assert out.splitlines()[0] == "fixed point [1, 2]: -2"
    assert list(workdir.iterdir()) == []


def test_open_rejects_zero_alpha(kp2_document):
    code, _, err = run(["open", kp2_document, "--divisor", "0", "--alpha", "0", "--trace", ""])
    assert code == 1
    assert "nonzero" in err


def test_open_rejects_bad_fixed_point(kp2_document):
    code, _, err = run(["open", kp2_document, "--divisor", "0", "--alpha", "1", "--fixed-point", "7", "--trace", ""])
    assert code == 1
    assert "fixed point must be" in err


def test_open_rejects_non_compact_divisor(kp2_document):
    code, _, _ = run(["open", kp2_document, "--divisor", "2", "--alpha", "1", "--trace", ""])
    assert code == 1


def test_pipeline(kp2_document, tmp_path):
    code, out, _ = run(["pipeline", kp2_document, "--divisor", "0", "--fixed-point", "0"])
    assert code == 0
    document = json.loads(out)
    assert [s["kind"] for s in document["steps"]] == ["compactify", "blowup", "flop", "remove_ray"]
    assert len(document["final_fan"]["rays"]) == 5

    path = tmp_path / "pipeline.json"
    assert run(["pipeline", kp2_document, "--divisor", "0", "--out", str(path)])[0] == 0
    assert json.loads(path.read_text()) == document


def test_pipeline_needs_one_fixed_point(kp2_document):
    code, _, err = run(["pipeline", kp2_document, "--divisor", "0", "--fixed-point", "all"])
    assert code == 1
    assert "single fixed point" in err
