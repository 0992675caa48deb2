# Standard Library
from fractions import Fraction

# Third Party
import pytest

# First Party
from k3_verifier.errors import DegenerateJ4
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.quartic.surface import (
    P1,
    P2,
    QuarticParams,
    curves,
    lines_concurrent_at_p1,
    params_from_J,
    params_to_J,
    quartic_poly,
)

SYMBOLIC = QuarticParams.symbolic()
RATIONAL = QuarticParams.from_values([1, 2, 3, 4, 5, 6])


@pytest.mark.parametrize("params", [SYMBOLIC, RATIONAL])
def test_lines_and_residual_curves_lie_on_the_quartic(params):
    surface = quartic_poly(params)
    for name, curve in curves(params).items():
        assert curve.contained_in(surface.F), name


def test_p1_and_p2_are_singular_points():
    surface = quartic_poly(SYMBOLIC)
    assert surface.is_singular_at(P1)
    assert surface.is_singular_at(P2)
    assert not surface.is_singular_at((0, 0, 0, 1))


def test_lines_are_concurrent_at_p1():
    assert lines_concurrent_at_p1(SYMBOLIC)
    assert lines_concurrent_at_p1(RATIONAL)
    assert not lines_concurrent_at_p1(QuarticParams.from_values([1, 2, 3, 4, 0, 6]))


def test_params_to_j():
    point = params_to_J(RATIONAL)
    assert point.values == (JElem(1), JElem(2), JElem(15), JElem(38), JElem(24))
    assert not point.degenerate


def test_degenerate_point():
    assert params_to_J(QuarticParams.from_values([1, 0, 0, 0, 1, 1])).degenerate


def test_weighted_scaling_of_the_point():
    point = params_to_J(RATIONAL).scaled(2)
    assert point.values == (JElem(4), JElem(16), JElem(15 * 16), JElem(38 * 32), JElem(24 * 64))


def test_gauge_inverts_params_to_j():
    names = ("J2", "J3", "J4", "J5", "J6")
    assert params_to_J(params_from_J()).values == tuple(JElem.var(name) for name in names)
    params = params_from_J({"J2": 1, "J3": 2, "J4": 3, "J5": 4, "J6": 1}, a=2)
    assert params.gamma == JElem(1)
    assert params.epsilon == JElem(3)
    assert params.zeta == JElem(3)
    assert params.delta == JElem(Fraction(1, 3))
    assert params_to_J(params).mapping()["J6"] == JElem(1)


def test_gauge_needs_nonzero_j4():
    with pytest.raises(DegenerateJ4):
        params_from_J({"J4": 0})


def test_swap_is_an_involution():
    assert RATIONAL.swapped().swapped() == RATIONAL
    assert RATIONAL.swapped().gamma == 5


def test_polarizing_condition():
    assert RATIONAL.is_polarizing()
    assert not QuarticParams.from_values([1, 2, 0, 0, 5, 6]).is_polarizing()
    assert not QuarticParams.from_values([1, 2, 3, 4, 0, 0]).is_polarizing()


def test_from_values_needs_six_parameters():
    with pytest.raises(ValueError):
        QuarticParams.from_values([1, 2, 3])
