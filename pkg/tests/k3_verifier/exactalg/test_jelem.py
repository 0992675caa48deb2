# Standard Library
from fractions import Fraction

# Third Party
import pytest

# First Party
from k3_verifier.errors import NotDivisible, ZeroInput
from k3_verifier.exactalg.jelem import (
    DEFAULT_RELATION,
    JElem,
    discriminant,
    divides_in,
    divmod_in,
    exact_quotient_in,
    multiplicity_in,
    reduce_a,
    resultant,
)
from k3_verifier.exactalg.mpoly import MPoly

a = JElem.var("a")
t = JElem.var("t")
J2, J3, J4, J5, J6 = (JElem.var(name) for name in ("J2", "J3", "J4", "J5", "J6"))


def test_relation_is_applied():
    assert (a**2 - JElem.from_poly(DEFAULT_RELATION)).is_zero()
    assert a**3 == a * JElem.from_poly(DEFAULT_RELATION)
    assert not (a**2).involves_a()


def test_reduce_a_splits_even_and_odd_parts():
    poly = MPoly.var("a") ** 3 + 2 * MPoly.var("a") ** 2 + 1
    even, odd = reduce_a(poly)
    assert even == 2 * DEFAULT_RELATION + 1
    assert odd == DEFAULT_RELATION


def test_fractions_are_normalized():
    value = (J4 * J5 + J4 * a) / (2 * J4 * J6)
    assert value.den == J6.p
    assert value.p == Fraction(1, 2) * J5.p
    assert value.q == Fraction(1, 2)
    negative = JElem(MPoly.var("J5"), 0, -MPoly.var("J6"))
    assert negative.den == MPoly.var("J6")
    assert negative.p == -MPoly.var("J5")


def test_gauge_products_reduce_to_j_ring_generators():
    zeta = (J5 + a) / 2
    delta = (J5 - a) / (2 * J4)
    assert delta * zeta == J6
    assert zeta + J4 * delta == J5
    assert zeta - J4 * delta == a


def test_inverse_rationalizes_by_conjugate():
    value = J5 + a
    inverse = value.inverse()
    assert inverse.den == MPoly.var("J4") * MPoly.var("J6")
    assert value * inverse == 1
    assert value / value == 1
    with pytest.raises(ZeroInput):
        JElem(0).inverse()


def test_zero_divisors_are_rejected_when_the_relation_degenerates():
    degenerate = JElem(MPoly.var("J5"), 1, 1, MPoly.var("J5") ** 2)
    with pytest.raises(ZeroInput):
        degenerate.inverse()


def test_polynomial_structure_in_t():
    poly = (J4 * t**2 - J5 * t + J6) * (t - a)
    assert poly.degree("t") == 3
    assert poly.leading_coefficient("t") == J4
    assert poly.coeff("t", 0) == -J6 * a
    assert poly.low_degree("t") == 0
    assert (t**3 * poly).low_degree("t") == 3
    assert (t**3 * poly).shift_down("t", 3) == poly


def test_compose_with_assignments():
    value = J5 + a
    assert value.compose({"J4": 0, "a": J5}) == 2 * J5
    on_a0_locus = (a**2).compose({"J4": MPoly.var("s") ** 2, "J5": 2 * MPoly.var("s") * MPoly.var("u")})
    assert on_a0_locus.compose({"J6": MPoly.var("u") ** 2}).is_zero()
    assert (t**2 + J2).compose({"t": Fraction(1, 2), "J2": 3}) == Fraction(13, 4)


def test_compose_with_fractional_values():
    value = J2 * t**2 + J3
    image = value.compose({"t": J5 / J6})
    assert image == J2 * J5**2 / J6**2 + J3


def test_long_division_in_t():
    divisor = t - a
    dividend = divisor * (t + J5) + J6
    quotient, remainder = divmod_in("t", dividend, divisor)
    assert quotient == t + J5
    assert remainder == J6
    assert divides_in("t", divisor, divisor * (t + J5))
    assert not divides_in("t", divisor, dividend)
    assert exact_quotient_in("t", divisor * (t + J5), divisor) == t + J5
    with pytest.raises(NotDivisible):
        exact_quotient_in("t", dividend, divisor)


def test_multiplicity_in_t():
    factor = J4 * t**2 - J5 * t + J6
    assert multiplicity_in("t", factor, factor**2 * (t - 1)) == 2
    assert multiplicity_in("t", t, t**5 * (t + J2)) == 5
    assert multiplicity_in("t", t - a, (t - a) * (t + a)) == 1


def test_resultant_and_discriminant_over_the_extension():
    assert resultant(t - a, t + a, "t") == 2 * a
    assert discriminant(t**2 - a, "t") == 4 * a
    assert discriminant(t**2 - a**2, "t") == 4 * JElem.from_poly(DEFAULT_RELATION)
    assert discriminant((t - J2) ** 2 / J6, "t").is_zero()


def test_resultant_accounts_for_denominators():
    assert resultant(t / J6 - 1, t + 1, "t") == (1 + J6) / J6
