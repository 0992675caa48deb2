# Third Party
import pytest
from pydantic import ValidationError

# First Party
from k3_verifier.model import CheckResult, CheckStatus, ExpectedRow, FiberEntry, SuiteReport, TableRow

ROW = {
    "fibration": "max",
    "locus": "generic",
    "label": "generic",
    "picard": 16,
    "fibers": "I10* + 8I1",
    "mw": "{𝕀}",
    "lattice": "H⊕D14(−1)",
    "disc_group": "ℤ2²",
}


def test_expected_row():
    row = ExpectedRow(**ROW)
    assert row.fibration.value == "max"
    assert row.gauge is None


def test_expected_row_wrong_fibration():
    with pytest.raises(ValidationError):
        _ = ExpectedRow(**{**ROW, "fibration": "weird"})


def test_expected_row_picard_out_of_range():
    with pytest.raises(ValidationError):
        _ = ExpectedRow(**{**ROW, "picard": 20})


def test_expected_row_unreadable_fibers():
    with pytest.raises(ValidationError):
        _ = ExpectedRow(**{**ROW, "fibers": "I10* + eight I1"})


def test_expected_row_unparseable_lattice():
    with pytest.raises(ValidationError):
        _ = ExpectedRow(**{**ROW, "lattice": "H⊕Q7(−1)"})


def test_fiber_entry_count_bounds():
    with pytest.raises(ValidationError):
        _ = FiberEntry(place="t", kodaira="I1", ade="", count=0)


def test_table_row_defaults():
    row = TableRow(**ROW, status=CheckStatus.PASS)
    assert row.diff == []
    assert row.lattice_aliases == []


def test_suite_status_follows_checks():
    passing = CheckResult(name="a", status=CheckStatus.PASS)
    skipped = CheckResult(name="b", status=CheckStatus.SKIP, detail="informational")
    failing = CheckResult(name="c", status=CheckStatus.FAIL)
    assert SuiteReport(suite="divisors", checks=[passing, skipped], elapsed=0.1).status == CheckStatus.PASS
    assert SuiteReport(suite="divisors", checks=[passing, failing], elapsed=0.1).status == CheckStatus.FAIL
    dumped = SuiteReport(suite="divisors", checks=[passing], elapsed=0.1).model_dump(mode="json")
    assert dumped["status"] == "pass"
