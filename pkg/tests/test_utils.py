import io
import logging

import pytest

from src.config import settings
from src.config.settings import Settings
from src.utils import ErrorHandler, configure_logging
from src.utils.errors import DegreeCapError, DocumentError, FanError, PoleError, QueryError


@pytest.mark.parametrize("error,code", [
    (FanError("bad fan"), 1),
    (QueryError("bad query"), 1),
    (DegreeCapError("increase degree cap", required_cap=3), 1),
    (PoleError(2), 1),
    (DocumentError("broken", 1, 2), 2),
    (OSError("disk"), 2),
    (ValueError("level"), 2),
    (RuntimeError("other"), 1),
])
def test_exit_codes(error, code):
    assert ErrorHandler.exit_code(error) == code


def test_report_is_framed():
    stream = io.StringIO()
    code = ErrorHandler(stream).handle_error(FanError("rays do not span N"), "command 'check'")
    lines = stream.getvalue().splitlines()
    assert code == 1
    assert lines[0] == "=" * 70
    assert "Context: command 'check'" in lines
    assert "Error Type: FanError" in lines
    assert "Error Message: rays do not span N" in lines


def test_document_error_position():
    error = DocumentError("Expecting value", 3, 7)
    assert str(error) == "Expecting value (line 3, column 7)"
    assert (error.line, error.column) == (3, 7)


def test_degree_cap_error_fields():
    error = DegreeCapError("increase degree cap", required_cap=5, missing=("x",))
    assert error.required_cap == 5
    assert error.missing == ("x",)


def test_log_level(monkeypatch):
    assert isinstance(settings.log_level(), int)
    monkeypatch.setattr(Settings, "LOG_LEVEL", "debug")
    assert settings.log_level() == logging.DEBUG
    monkeypatch.setattr(Settings, "LOG_LEVEL", "chatty")
    with pytest.raises(ValueError, match="TORIC_GW_LOG_LEVEL"):
        settings.log_level()


def test_table_columns():
    assert settings.table_columns(("e", "f")) == ("e", "f", "invariant")


def test_configure_logging_installs_one_handler():
    logger = configure_logging(logging.INFO)
    configure_logging(logging.INFO)
    assert logger.name == "src"
    assert logger.level == logging.INFO
    assert len(logger.handlers) == 1
