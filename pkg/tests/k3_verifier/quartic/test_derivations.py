# Third Party
import pytest

# First Party
from k3_verifier.constants import ALT, BFD, FIBRATIONS, MAX, STD
from k3_verifier.errors import PullbackMismatch
from k3_verifier.quartic.derivations.bfd_derivation import BfdDerivation
from k3_verifier.quartic.derivations.derivation_factory import (
    DerivationFactory,
    derive_fibration,
    derive_pullback,
)
from k3_verifier.quartic.surface import QuarticParams


@pytest.mark.parametrize("which", FIBRATIONS)
def test_derived_coefficients_match_the_closed_forms(which):
    pulled = derive_pullback(which)
    assert pulled.kind == which
    assert not pulled.cofactor.is_zero()
    assert "y" not in pulled.cofactor.variables()


@pytest.mark.parametrize("which", FIBRATIONS)
def test_derived_coefficients_at_a_rational_point(which):
    pulled = derive_pullback(which, QuarticParams.from_values([1, 2, 3, 4, 5, 6]))
    assert set(pulled.a6.variables()) <= {"u", "v"}


@pytest.mark.parametrize("which", FIBRATIONS)
def test_derived_model_is_in_the_chart_v_equals_one(which):
    derived = derive_fibration(which)
    assert derived.variable == "u"


@pytest.mark.parametrize("which", FIBRATIONS)
def test_gauged_model_is_a_rescaling_of_the_j_model(which):
    derivation = DerivationFactory.create_derivation(which)
    assert derivation.matches_j_model() == derivation.scale


def test_derivations_use_their_pencils():
    pencils = {which: DerivationFactory.create_derivation(which).pencil for which in (STD, ALT, BFD, MAX)}
    assert pencils == {STD: "L2", ALT: "L1", BFD: "C2", MAX: "C3"}


def test_bfd_with_the_opposite_sign_does_not_give_a_weierstrass_model():
    with pytest.raises(PullbackMismatch):
        BfdDerivation(printed_sign=True).pull_back(QuarticParams.symbolic())


def test_unknown_fibration():
    with pytest.raises(NotImplementedError):
        DerivationFactory.create_derivation("elliptic")
