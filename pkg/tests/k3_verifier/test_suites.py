# Third Party
import pytest

# First Party
from k3_verifier.configuration import REQUIRED_ENV_VARS
from k3_verifier.constants import SUITES
from k3_verifier.environment_wrapper import validate_environment
from k3_verifier.errors import IdentityFailed
from k3_verifier.model import CheckStatus
from k3_verifier.suites import SUITE_STEPS, from_results, guarded, informational, outcome, run_suite


@pytest.fixture
def env_variables():
    return validate_environment(REQUIRED_ENV_VARS)


def test_every_suite_has_steps(env_variables):
    assert set(SUITE_STEPS) == set(SUITES)
    for name in SUITES:
        assert SUITE_STEPS[name](env_variables)


def test_divisors_suite(env_variables):
    report = run_suite("divisors", env_variables)
    assert report.suite == "divisors"
    assert report.checks
    assert report.status == CheckStatus.PASS
    assert report.elapsed >= 0


def test_lattices_suite(env_variables):
    report = run_suite("lattices", env_variables)
    assert report.status == CheckStatus.PASS
    assert any(check.name.startswith("exact algebra: ") for check in report.checks)


def test_unknown_suite(env_variables):
    with pytest.raises(NotImplementedError):
        run_suite("everything", env_variables)


def test_outcome_statuses():
    assert outcome("holds", True).status == CheckStatus.PASS
    failed = outcome("fails", False, "details")
    assert failed.status == CheckStatus.FAIL
    assert failed.detail == "details"
    assert informational("variant", "noted").status == CheckStatus.SKIP


def test_from_results():
    checks = from_results({"one": True, "two": False})
    assert [check.status for check in checks] == [CheckStatus.PASS, CheckStatus.FAIL]


def test_guarded_turns_errors_into_failures():
    def step():
        raise IdentityFailed("psi is an involution")

    (check,) = guarded("nikulin involution", step)
    assert check.status == CheckStatus.FAIL
    assert check.detail.startswith("IdentityFailed")


def test_guarded_passes_results_through():
    assert guarded("step", lambda: [outcome("holds", True)])[0].name == "holds"
