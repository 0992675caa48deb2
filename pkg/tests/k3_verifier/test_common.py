# Standard Library
import logging
from pathlib import Path

# Third Party
from mock.mock import patch

# First Party
from k3_verifier.common import (
    get_expected_tables_path,
    get_logging_settings_path,
    initialise_logs,
    load_expected_tables_into_map,
)
from k3_verifier.model import ExpectedRow

THIS_DIR = Path(__file__).parent


def test_static_paths_point_into_the_package():
    assert get_logging_settings_path().endswith("k3_verifier/static/logging.ini")
    assert get_expected_tables_path().endswith("k3_verifier/static/expected_tables.json")
    assert Path(get_logging_settings_path()).is_file()


def test_load_expected_tables_into_map():
    my_data_path = THIS_DIR.parent / "fixtures/working_expected_tables.json"
    tables: dict[str, list[ExpectedRow]] = load_expected_tables_into_map(str(my_data_path))

    assert list(tables) == ["alt", "bfd"]
    assert [row.locus for row in tables["alt"]] == ["generic", "j45"]
    assert tables["alt"][0].fibers == "I8* + 2I2 + 6I1"
    assert tables["alt"][0].mw == "ℤ/2ℤ"
    assert tables["alt"][1].picard == 18
    assert tables["bfd"][0].gauge == "e8 ⊕ e7"


def test_packaged_tables_have_twenty_two_rows():
    tables = load_expected_tables_into_map(get_expected_tables_path())
    assert {name: len(rows) for name, rows in tables.items()} == {"std": 5, "alt": 6, "bfd": 6, "max": 5}


@patch("sys.exit")
def test_load_expected_tables_into_map_with_invalid_rows(sys_exit):
    my_data_path = THIS_DIR.parent / "fixtures/invalid_row_expected_tables.json"
    assert {} == load_expected_tables_into_map(str(my_data_path))
    assert sys_exit.called


@patch("sys.exit")
def test_load_expected_tables_into_map_with_malformed_json(sys_exit):
    my_data_path = THIS_DIR.parent / "fixtures/malformed_expected_tables.json"
    assert {} == load_expected_tables_into_map(str(my_data_path))
    sys_exit.assert_called_once_with(-1)


def test_initialise_logs(tmp_path):
    logger_config = initialise_logs(str(tmp_path / "k3.log"), "1")
    assert logger_config.level == logging.DEBUG
    logger_config = initialise_logs(str(tmp_path / "k3.log"), "0")
    assert logger_config.level == logging.INFO
