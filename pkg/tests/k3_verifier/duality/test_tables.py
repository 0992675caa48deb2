# Standard Library
import json
from pathlib import Path

# Third Party
import pytest

# First Party
from k3_verifier.duality.tables import (
    all_rows_pass,
    emit_tables,
    plain_label,
    render_json,
    render_markdown,
    table_label,
)
from k3_verifier.errors import RowMismatch
from k3_verifier.model import CheckStatus

THIS_DIR = Path(__file__).parent


def fixture(name: str) -> str:
    return str(THIS_DIR.parent.parent / f"fixtures/{name}")


def test_plain_label():
    assert plain_label("H⊕E7(−1)⊕E7(−1)") == "H+E7+E7"
    assert plain_label("H⊕D16⁺(−1)") == "H+D16^+"


def test_table_label():
    assert table_label("H+E8+E7") == "H⊕E8(−1)⊕E7(−1)"


def test_matching_rows_pass():
    tables = emit_tables(("alt", "bfd"), fixture("working_expected_tables.json"))
    assert [table.fibration.value for table in tables] == ["alt", "bfd"]
    assert [len(table.rows) for table in tables] == [2, 1]
    assert all_rows_pass(tables)
    assert tables[0].rows[0].gauge == "so(24) ⊕ su(2) ⊕ su(2)"


def test_fibration_without_rows():
    tables = emit_tables(("std",), fixture("working_expected_tables.json"))
    assert tables[0].rows == []
    assert all_rows_pass(tables)


def test_wrong_row_is_reported():
    tables = emit_tables(("alt",), fixture("wrong_expected_tables.json"))
    row = tables[0].rows[0]
    assert row.status == CheckStatus.FAIL
    assert row.fibers == "I8* + 2I2 + 6I1"
    assert "fibers: expected I8* + I4 + 6I1 got I8* + 2I2 + 6I1" in row.diff
    assert any(entry.startswith("gauge:") for entry in row.diff)
    assert not all_rows_pass(tables)


def test_wrong_row_in_strict_mode():
    with pytest.raises(RowMismatch):
        emit_tables(("alt",), fixture("wrong_expected_tables.json"), strict=True)


def test_rendering():
    tables = emit_tables(("bfd",), fixture("working_expected_tables.json"))
    markdown = render_markdown(tables)
    assert markdown.startswith("### bfd")
    assert "| J4=0 | 17 | II* + III* + 5I1 |" in markdown
    rendered = json.loads(render_json(tables))
    assert rendered[0]["rows"][0]["status"] == "pass"
