# Third Party
import pytest

# First Party
from k3_verifier.errors import MatchFailed
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.duality.ftheory import (
    DualityParams,
    ftheory_e8_form,
    ftheory_so32_form,
    lambda_weight_check,
    weight_scaled,
)
from k3_verifier.fibrations.models import model


def test_e8_form_is_the_bfd_model():
    assert ftheory_e8_form().coefficients() == model("bfd").coefficients()


def test_so32_form_is_the_alt_model():
    assert ftheory_so32_form().coefficients() == model("alt").coefficients()


def test_lambda_dependence_is_the_weight_scaling():
    results = lambda_weight_check()
    assert len(results) == 4
    assert all(results.values())


def test_forms_at_lambda_two():
    lam = JElem(2)
    assert ftheory_so32_form(lam=lam).coefficients() == weight_scaled(model("alt"), lam**2).coefficients()
    assert ftheory_e8_form(lam=lam).coefficients() == weight_scaled(model("bfd"), lam**2).coefficients()


def test_forms_at_a_rational_point():
    j = {"J2": 1, "J3": 2, "J4": 3, "J5": 4, "J6": 5}
    assert ftheory_so32_form(j).is_rational()
    assert ftheory_e8_form(j).is_rational()


def test_duality_params_constraints():
    params = DualityParams.from_j({"J4": JElem(3)})
    assert params.d == JElem(-1)
    assert params.a == JElem(-3)
    assert params.b == JElem(2)
    with pytest.raises(MatchFailed):
        DualityParams(*(JElem(1) for _ in range(8)))
