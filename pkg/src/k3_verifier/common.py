# Standard Library
import logging.config
import sys
import sysconfig
from os import path

# First Party
from k3_verifier.constants import EXPECTED_TABLES_FILE, LOGGING_FILE
from k3_verifier.expected_tables_parser import parse_expected_tables_file
from k3_verifier.model import ExpectedRow

logger = logging.getLogger(__name__)


def get_static_dir():
    if path.isdir(sysconfig.get_path("purelib") + "/k3_verifier"):
        base_dir = sysconfig.get_path("purelib") + "/k3_verifier"
    else:
        base_dir = path.dirname(__file__)

    return base_dir + "/static"


def get_logging_settings_path():
    return get_static_dir() + "/" + LOGGING_FILE


def get_expected_tables_path():
    return get_static_dir() + "/" + EXPECTED_TABLES_FILE


def initialise_logs(log_file_path: str, debug: str):
    logging_ini_file = get_logging_settings_path()
    logging.config.fileConfig(
        logging_ini_file,
        defaults={"log_file_path": log_file_path},
        disable_existing_loggers=False,
    )
    logger_config = logging.getLogger("root")
    if int(debug) == 1:
        logger_config.setLevel(logging.DEBUG)
    else:
        logger_config.setLevel(logging.INFO)
    return logger_config


def load_expected_tables_into_map(file_path: str) -> dict[str, list[ExpectedRow]]:
    expected_rows: list[ExpectedRow] = parse_expected_tables_file(file_path)
    if not expected_rows:
        logger.info(f"Exiting due to issues in the expected table definitions in file {file_path}")
        sys.exit(-1)
    tables: dict[str, list[ExpectedRow]] = {}
    for row in expected_rows:
        tables.setdefault(row.fibration.value, []).append(row)
    return tables
