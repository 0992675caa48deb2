# Standard Library
import random

# First Party
from k3_verifier.exactalg.properties import (
    PROPERTY_FAMILIES,
    random_nonzero_poly,
    random_poly,
    run_properties,
    smith_decomposition,
)


def test_every_property_family_holds(property_cases):
    failures = run_properties(property_cases, 20240229)
    assert set(failures) == set(PROPERTY_FAMILIES)
    assert failures == {name: [] for name in PROPERTY_FAMILIES}


def test_property_runs_are_reproducible():
    first = [random_poly(random.Random("7:gcd")) for _ in range(3)]
    second = [random_poly(random.Random("7:gcd")) for _ in range(3)]
    assert first == second


def test_random_polys_stay_in_their_variables(rng):
    for _ in range(20):
        poly = random_poly(rng, names=("x", "y"))
        assert set(poly.variables()) <= {"x", "y"}
        assert not random_nonzero_poly(rng).is_zero()


def test_smith_decomposition_on_many_sizes(rng):
    assert all(smith_decomposition(rng) is None for _ in range(10))
