# Third Party
import pytest

# First Party
from k3_verifier.constants import ALT, BFD, FIBRATIONS, STD
from k3_verifier.errors import Mismatch
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.fibrations.equivalence import equivalence_check
from k3_verifier.fibrations.models import model
from k3_verifier.fibrations.weierstrass import WeierstrassModel

t = JElem.var("t")


@pytest.mark.parametrize("which", FIBRATIONS)
def test_model_is_a_rescaling_of_itself(which):
    assert equivalence_check(model(which), model(which)) == JElem(1)


@pytest.mark.parametrize("which", FIBRATIONS)
def test_constant_rescaling_is_recovered(which):
    assert equivalence_check(model(which), model(which).rescaled(3)) == JElem(3)


def test_monomial_rescaling_is_recovered():
    assert equivalence_check(model(ALT), model(ALT).rescaled(t * 2)) == t * 2


def test_different_zero_patterns():
    with pytest.raises(Mismatch):
        equivalence_check(model(STD), model(ALT))


def test_models_that_are_not_rescalings():
    with pytest.raises(Mismatch):
        equivalence_check(model(STD), model(BFD))


def test_different_base_variables():
    source = WeierstrassModel("t", JElem(0), t, t**2)
    target = WeierstrassModel("u", JElem(0), JElem.var("u"), JElem.var("u") ** 2, variable="u")
    with pytest.raises(Mismatch):
        equivalence_check(source, target)


def test_non_monomial_scale():
    source = WeierstrassModel("source", t, JElem(1), JElem(0))
    with pytest.raises(Mismatch):
        equivalence_check(source, source.rescaled(t + 1))
