# Standard Library
from pathlib import Path

# First Party
from k3_verifier.expected_tables_parser import parse_expected_tables_file
from k3_verifier.model import FibrationKind

THIS_DIR = Path(__file__).parent


def test_parse_expected_tables_file():
    my_data_path = THIS_DIR.parent / "fixtures/working_expected_tables.json"
    rows = parse_expected_tables_file(str(my_data_path))
    assert len(rows) == 3
    assert rows[0].fibration == FibrationKind.ALT
    assert rows[0].lattice == "H⊕E7(−1)⊕E7(−1)"
    assert rows[0].disc_group == "ℤ2²"
    assert rows[2].fibration == FibrationKind.BFD
    assert rows[2].label == "J4=0"


def test_parse_expected_tables_file_rejects_the_whole_file_on_a_bad_row():
    my_data_path = THIS_DIR.parent / "fixtures/invalid_row_expected_tables.json"
    assert parse_expected_tables_file(str(my_data_path)) == []


def test_parse_expected_tables_file_malformed_json():
    my_data_path = THIS_DIR.parent / "fixtures/malformed_expected_tables.json"
    assert parse_expected_tables_file(str(my_data_path)) == []


def test_parse_expected_tables_file_missing():
    assert parse_expected_tables_file(str(THIS_DIR / "no_such_file.json")) == []
