# Standard Library
import json
from pathlib import Path

# Third Party
import pytest

# First Party
from k3_verifier.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, parse_assignment, quartic_params, run
from k3_verifier.errors import UsageError
from k3_verifier.exactalg.jelem import JElem

THIS_DIR = Path(__file__).parent


@pytest.fixture
def k3_verify(tmp_path):
    log_file = str(tmp_path / "k3_verifier.log")

    def invoke(*argv: str) -> int:
        return run(["--log-file", log_file, *argv])

    return invoke


def test_parse_assignment():
    values = parse_assignment(["J4=0", "J5=2*s*u", "J6=1/2"], ("J4", "J5", "J6"))
    assert values["J4"] == JElem(0)
    assert values["J5"] == JElem.var("s") * JElem.var("u") * 2
    assert values["J6"] == JElem(1) / 2


@pytest.mark.parametrize("pair", ["J4", "J4=", "J7=1", "J4=1/0"])
def test_parse_assignment_rejects(pair):
    with pytest.raises(UsageError):
        parse_assignment([pair], ("J4",))


def test_quartic_params_keeps_unset_parameters_symbolic():
    params = quartic_params(["gamma=1"])
    assert params.gamma.is_constant()
    assert params.alpha.variables() == ("alpha",)


def test_help(k3_verify, capsys):
    assert k3_verify("--help") == EXIT_OK
    assert "verify" in capsys.readouterr().out


def test_unknown_command(k3_verify):
    assert k3_verify("prove") == EXIT_USAGE


def test_lattice_disc(k3_verify, capsys):
    assert k3_verify("lattice", "disc", "--spec", "H+E7+E7") == EXIT_OK
    out = capsys.readouterr().out
    assert "rank 16" in out
    assert "discriminant group" in out


def test_lattice_disc_with_a_bad_spec(k3_verify):
    assert k3_verify("lattice", "disc", "--spec", "H+Q9") == EXIT_USAGE


def test_divisors_json(k3_verify, capsys):
    assert k3_verify("divisors", "--format", "json") == EXIT_OK
    json.loads(capsys.readouterr().out)


def test_classify_bfd_on_j4(k3_verify, capsys):
    assert k3_verify("classify", "--fibration", "bfd", "--set", "J4=0") == EXIT_OK
    assert "II* + III* + 5I1" in capsys.readouterr().out


def test_classify_generic_json(k3_verify, capsys):
    assert k3_verify("classify", "--fibration", "alt", "--format", "json") == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["fibration"] == "alt"
    assert report["mw_torsion"] == "ℤ/2ℤ"
    assert report["euler"] == 24


def test_classify_with_a_bad_assignment(k3_verify):
    assert k3_verify("classify", "--fibration", "std", "--set", "J9=1") == EXIT_USAGE


def test_classify_degenerate_point(k3_verify, capsys):
    zeros = [item for name in ("J2", "J3", "J4", "J5", "J6", "a") for item in ("--set", f"{name}=0")]
    assert k3_verify("classify", "--fibration", "alt", *zeros) == EXIT_FAILED
    assert capsys.readouterr().out.startswith("FAIL")


def test_tables_against_a_fixture(k3_verify, capsys):
    expected = str(THIS_DIR.parent / "fixtures/working_expected_tables.json")
    assert k3_verify("tables", "--fibration", "bfd", "--format", "json", "--expected", expected) == EXIT_OK
    tables = json.loads(capsys.readouterr().out)
    assert tables[0]["rows"][0]["fibers"] == "II* + III* + 5I1"


def test_tables_with_a_wrong_row(k3_verify, tmp_path):
    expected = str(THIS_DIR.parent / "fixtures/wrong_expected_tables.json")
    out = tmp_path / "tables.md"
    assert k3_verify("tables", "--fibration", "alt", "--expected", expected, "--out", str(out)) == EXIT_FAILED
    assert "fail" in out.read_text(encoding="utf-8")


def test_verify_divisors_json(k3_verify, capsys):
    assert k3_verify("verify", "--suite", "divisors", "--format", "json") == EXIT_OK
    (report,) = json.loads(capsys.readouterr().out)
    assert report["suite"] == "divisors"
    assert report["status"] == "pass"
    assert "elapsed" not in report


def test_verify_with_timings(k3_verify, capsys):
    assert k3_verify("verify", "--suite", "divisors", "--timings") == EXIT_OK
    assert capsys.readouterr().out.startswith("== divisors: pass (")


def test_quartic_pencils(k3_verify, capsys):
    assert k3_verify("quartic", "verify", "--check", "pencils") == EXIT_OK
    assert "PASS  T contains R2" in capsys.readouterr().out


def test_bad_environment(k3_verify, monkeypatch):
    monkeypatch.setenv("K3_PROPERTY_CASES", "many")
    assert k3_verify("divisors") == EXIT_USAGE


def test_witness_on_a0(k3_verify, capsys):
    assert k3_verify("witness", "--locus", "a0") == EXIT_OK
    assert "J2=1, J3=1, J4=1, J5=2, J6=1, a=0" in capsys.readouterr().out
