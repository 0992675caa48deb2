# Standard Library
from fractions import Fraction

# Third Party
import pytest

# First Party
from k3_verifier.constants import LOCUS_GENERIC, LOCUS_J4, LOCUS_J45, LOCUS_RES_ALT, LOCUS_RES_BFD, LOCUS_RES_STD
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.fibrations.loci import LOCI, complete_assignment, locus, locus_of, rational_sqrt


@pytest.mark.parametrize(
    "alias, name", [("resDE", LOCUS_RES_ALT), ("resfg", LOCUS_RES_STD), ("resFG", LOCUS_RES_BFD), ("j4", LOCUS_J4)]
)
def test_locus_aliases(alias, name):
    assert locus(alias).name == name


def test_unknown_locus():
    with pytest.raises(KeyError):
        locus("J7=0")


def test_picard_ranks():
    assert {name: place.picard for name, place in LOCI.items()} == {
        "generic": 16,
        "res_std": 16,
        "res_alt": 16,
        "res_bfd": 16,
        "a0": 17,
        "j30": 17,
        "j4": 17,
        "j45": 18,
    }


def test_missing_skeleton():
    with pytest.raises(KeyError):
        locus(LOCUS_RES_ALT).skeleton("alt")


def test_a_follows_j5_on_the_j4_locus():
    completed = complete_assignment({"J4": JElem(0)})
    assert completed["a"] == JElem.var("J5")
    assert locus_of(completed).name == LOCUS_J4


def test_a_is_the_rational_root():
    completed = complete_assignment({"J4": JElem(1), "J5": JElem(3), "J6": JElem(2)})
    assert completed["a"] == JElem(1)


def test_a_stays_free_without_a_rational_root():
    assert "a" not in complete_assignment({"J4": JElem(1), "J5": JElem(1), "J6": JElem(1)})


def test_given_a_is_kept():
    assert complete_assignment({"J4": JElem(0), "a": JElem(0)})["a"] == JElem(0)


def test_locus_of():
    assert locus_of({}).name == LOCUS_GENERIC
    assert locus_of({"J4": JElem(0), "J5": JElem(0), "a": JElem(0)}).name == LOCUS_J45
    assert locus_of({"J4": JElem(2)}) is None


@pytest.mark.parametrize(
    "value, root",
    [(Fraction(9, 4), Fraction(3, 2)), (Fraction(0), Fraction(0)), (Fraction(2), None), (Fraction(-1), None)],
)
def test_rational_sqrt(value, root):
    assert rational_sqrt(value) == root
