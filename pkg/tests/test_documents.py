import json

import pytest

from src.documents import FanDocumentReader, ResultWriter, dumps
from src.surgery.steps import fan_document
from src.utils.errors import ClassTransportError, DocumentError, FanError
from src.vertex import gw_table

from tests.fans import KP2_CONES, KP2_LINE, KP2_RAYS


@pytest.fixture
def reader():
    return FanDocumentReader()


def test_read_fan_document(reader, kp2_document, kp2):
    document = reader.read(kp2_document)
    assert document.fan == kp2
    assert document.classes == {"l": KP2_LINE}
    assert document.source == kp2_document
    assert document.checked() is document


def test_class_order_is_kept(reader):
    text = json.dumps({"rays": [list(r) for r in KP2_RAYS], "cones": [list(c) for c in KP2_CONES],
                       "classes": {"z": list(KP2_LINE), "a": [-6, 2, 2, 2]}})
    assert list(reader.parse(text).classes) == ["z", "a"]


@pytest.mark.parametrize("text,message", [
    ("[]", "top level must be an object"),
    ('{"cones": []}', "missing key 'rays'"),
    ('{"rays": {}, "cones": []}', "'rays' must be a list"),
    ('{"rays": [[0, 0]], "cones": []}', "rays[0] must be three integers"),
    ('{"rays": [[0, 0, true]], "cones": []}', "rays[0] must be three integers"),
    ('{"rays": [[0, 0, 1.5]], "cones": []}', "rays[0] must be three integers"),
    ('{"rays": [[0, 0, 1]], "cones": [[0, 1, 2]]}', "refers to a missing ray"),
    ('{"rays": [[0, 0, 1]], "cones": [], "classes": []}', "'classes' must be an object"),
    ('{"rays": [[0, 0, 1]], "cones": [], "classes": {"c": [1, 2]}}', "class 'c' must be 1 integers"),
])
def test_malformed_documents(reader, text, message):
    with pytest.raises(DocumentError) as info:
        reader.parse(text)
    assert message in str(info.value)
    assert info.value.exit_code == 2


def test_json_errors_carry_line_and_column(reader):
    with pytest.raises(DocumentError) as info:
        reader.parse('{\n  "rays": [[0, 0, 1],,]\n}')
    assert info.value.line == 2
    assert info.value.column is not None
    assert "(line 2, column" in str(info.value)


def test_read_missing_file(reader, tmp_path):
    with pytest.raises(DocumentError, match="cannot read"):
        reader.read(str(tmp_path / "nothing.json"))


def test_checked_rejects_invalid_fans_and_classes(reader):
    invalid = json.dumps({"rays": [[0, 0, 2], [1, 0, 1], [0, 1, 1]], "cones": [[0, 1, 2]]})
    with pytest.raises(FanError, match="invalid fan"):
        reader.parse(invalid).checked()
    bad_class = json.dumps({"rays": [list(r) for r in KP2_RAYS], "cones": [list(c) for c in KP2_CONES],
                            "classes": {"l": [1, 1, 1, 1]}})
    with pytest.raises(ClassTransportError):
        reader.parse(bad_class).checked()


def test_dumps_is_sorted_and_terminated():
    text = dumps({"b": 1, "a": [1, 2]})
    assert text.endswith("}\n")
    assert text.index('"a"') < text.index('"b"')


def test_writer(kp2, tmp_path):
    table = gw_table(kp2, {"l": KP2_LINE}, cap=1)
    writer = ResultWriter()
    writer.write_table(table, str(tmp_path / "t.csv"))
    writer.write_table(table, str(tmp_path / "t.json"))
    writer.write_document({"k": 1}, str(tmp_path / "d.json"))
    assert (tmp_path / "t.csv").read_text() == "l,invariant\n1,3\n"
    assert json.loads((tmp_path / "t.json").read_text())["cap"] == 1
    assert (tmp_path / "d.json").read_text() == '{\n  "k": 1\n}\n'
    with pytest.raises(DocumentError, match="cannot write"):
        writer.write_text("x", str(tmp_path / "missing" / "out.csv"))


def test_fan_document_round_trip(reader, kf1_document):
    first = reader.read(kf1_document)
    text = dumps(fan_document(first.fan))
    second = reader.parse(text)
    assert second.fan.rays == first.fan.rays
    assert second.fan.cones == first.fan.cones
    assert dumps(fan_document(second.fan)) == text
