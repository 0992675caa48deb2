# Third Party
import pytest

# First Party
from k3_verifier.divisors.curves import (
    CURVE_NAMES,
    DivisorClass,
    curve_graph,
    intersection_vector,
    pairing,
    polarizing_divisor,
)
from k3_verifier.errors import UnknownCurve


def curve(name):
    return DivisorClass.curve(name)


def test_nineteen_curves_with_minus_two_diagonal():
    graph = curve_graph()
    assert len(CURVE_NAMES) == 19
    assert all(graph.intersection(name, name) == -2 for name in CURVE_NAMES)
    assert graph.matrix.is_symmetric()


@pytest.mark.parametrize(
    "first, second, expected",
    [
        ("a1", "a1", -2),
        ("a1", "a2", 1),
        ("a1", "a3", 0),
        ("L3", "R1", 2),
        ("R2", "b5", 2),
        ("b2", "L1", 1),
        ("L1", "L2", 0),
    ],
)
def test_pairing_of_curves(first, second, expected):
    assert pairing(curve(first), curve(second)) == expected
    assert pairing(curve(second), curve(first)) == expected


def test_polarizing_divisor_has_degree_four():
    hyperplane = polarizing_divisor()
    assert pairing(hyperplane, hyperplane) == 4
    degrees = {name: value for name, value in intersection_vector(hyperplane).items() if value}
    assert degrees == {"L1": 1, "L2": 1, "L3": 1, "R1": 2, "R2": 3}


def test_neighbours():
    assert curve_graph().neighbours("a1") == {"a2": 1, "L3": 1, "R2": 1}
    assert curve_graph().neighbours("b4") == {"b3": 1, "b5": 1, "R1": 1}


def test_parse_and_arithmetic():
    divisor = DivisorClass.parse("L3 + 2a1 − a6")
    assert divisor.coefficients == {"L3": 1, "a1": 2, "a6": -1}
    assert str(divisor) == "2a1 - a6 + L3"
    assert divisor - divisor == DivisorClass()
    assert (2 * divisor).coefficient("a1") == 4
    assert DivisorClass.parse("0").is_zero()
    assert DivisorClass.parse(str(divisor)) == divisor
    assert divisor.support() == ["a1", "a6", "L3"]


def test_pairing_is_bilinear():
    first = DivisorClass.parse("a1 + 2a2 + L2")
    second = DivisorClass.parse("3b2 - R1")
    third = DivisorClass.parse("L1 + a9")
    assert pairing(first + second, third) == pairing(first, third) + pairing(second, third)
    assert pairing(3 * first, third) == 3 * pairing(first, third)


@pytest.mark.parametrize("text", ["c1", "2x + a1", "a10"])
def test_unknown_curves_are_rejected(text):
    with pytest.raises(UnknownCurve):
        DivisorClass.parse(text)
