# Standard Library
import json
import logging
from json import JSONDecodeError

# Third Party
from pydantic import ValidationError

# First Party
from k3_verifier.model import ExpectedRow

logger = logging.getLogger(__name__)


def parse_expected_tables_file(filepath: str) -> list[ExpectedRow]:
    expected_rows: list[ExpectedRow] = []
    errors_found = False
    logger.info(f"Reading expected tables from file {filepath}")
    try:
        with open(filepath, encoding="utf-8") as expected_tables_file:
            parsed_tables = json.loads(expected_tables_file.read())
            for fibration in parsed_tables:
                for row in parsed_tables[fibration]:
                    try:
                        logger.debug(f"Parsing expected row '{row.get('label')}' of fibration {fibration}")
                        expected_rows.append(ExpectedRow(fibration=fibration, **row))
                    except (ValidationError, TypeError, AttributeError) as validation_error:
                        logger.error(
                            f"Failed while parsing expected row of fibration '{fibration}': {validation_error}"
                        )
                        errors_found = True
    except JSONDecodeError as json_error:
        logger.error(f"Failed to parse expected tables file '{filepath}': {json_error}")
        errors_found = True
    except FileNotFoundError:
        logger.error(f"Expected tables file not found: '{filepath}'")
        errors_found = True
    if errors_found:
        return []
    return expected_rows
