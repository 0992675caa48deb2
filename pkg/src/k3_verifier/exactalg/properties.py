# Standard Library
import logging
import random
from collections.abc import Callable

# First Party
from k3_verifier.exactalg.intmatrix import IntMatrix, smith_normal_form
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.exactalg.mpoly import MPoly, div_exact, divides, gcd, resultant

logger = logging.getLogger(__name__)

SNF_MAX_SIZE = 16


def random_poly(rng: random.Random, names=("x", "y", "z"), max_terms: int = 4, max_exponent: int = 2) -> MPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        monomial = tuple((name, rng.randint(0, max_exponent)) for name in names)
        terms[tuple(item for item in monomial if item[1])] = rng.randint(-3, 3)
    return MPoly.from_terms(terms)


def random_nonzero_poly(rng: random.Random, **kwargs) -> MPoly:
    poly = random_poly(rng, **kwargs)
    while poly.is_zero():
        poly = random_poly(rng, **kwargs)
    return poly


def ring_axioms(rng: random.Random) -> str | None:
    p, q, r = random_poly(rng), random_poly(rng), random_poly(rng)
    if (p + q) + r != p + (q + r) or (p * q) * r != p * (q * r):
        return f"associativity fails for {p}, {q}, {r}"
    if p * (q + r) != p * q + p * r:
        return f"distributivity fails for {p}, {q}, {r}"
    if p * q != q * p or p + q != q + p:
        return f"commutativity fails for {p}, {q}"
    return None


def exact_division(rng: random.Random) -> str | None:
    p, q = random_poly(rng), random_nonzero_poly(rng)
    return None if div_exact(p * q, q) == p else f"(p q) / q != p for p = {p}, q = {q}"


def gcd_divides(rng: random.Random) -> str | None:
    common = random_nonzero_poly(rng, max_terms=2, max_exponent=1)
    p, q = random_nonzero_poly(rng) * common, random_nonzero_poly(rng) * common
    g = gcd(p, q)
    if not (divides(g, p) and divides(g, q) and divides(common, g)):
        return f"gcd({p}, {q}) = {g} is not a greatest common divisor"
    return None


def resultant_detects_common_factors(rng: random.Random) -> str | None:
    common = random_nonzero_poly(rng, names=("x", "y"), max_terms=2, max_exponent=1)
    p = random_nonzero_poly(rng, names=("x", "y"), max_terms=3)
    q = random_nonzero_poly(rng, names=("x", "y"), max_terms=3)
    if rng.random() < 0.5:
        p, q = p * common, q * common
    shared = gcd(p, q).degree("x") > 0
    if resultant(p, q, "x").is_zero() != shared:
        return f"Res_x({p}, {q}) vanishing disagrees with gcd degree"
    return None


def relation_reduces(rng: random.Random) -> str | None:
    a = JElem.var("a")
    scale = rng.randint(1, 9)
    relation = JElem.var("J5") ** 2 - 4 * JElem.var("J4") * JElem.var("J6")
    return None if (scale * a) ** 2 - scale**2 * relation == 0 else "a^2 does not reduce by the defining relation"


def smith_decomposition(rng: random.Random) -> str | None:
    size = rng.randint(1, SNF_MAX_SIZE)
    matrix = IntMatrix.from_rows([[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)])
    left, diagonal, right = smith_normal_form(matrix)
    entries = diagonal.diagonal_entries()
    if left @ matrix @ right != diagonal or abs(left.det()) != 1 or abs(right.det()) != 1:
        return f"U M V = S fails for a {size}x{size} matrix"
    for first, second in zip(entries, entries[1:]):
        if (first == 0 and second != 0) or (first != 0 and second % first):
            return f"divisibility chain {entries} is broken"
    return None


PROPERTY_FAMILIES: dict[str, Callable[[random.Random], str | None]] = {
    "ring axioms": ring_axioms,
    "exact division": exact_division,
    "gcd": gcd_divides,
    "resultant": resultant_detects_common_factors,
    "extension relation": relation_reduces,
    "smith normal form": smith_decomposition,
}


def run_properties(cases: int, seed: int) -> dict[str, list[str]]:
    """Failures per property family over ``cases`` seeded random instances each."""
    failures: dict[str, list[str]] = {}
    for name, family in PROPERTY_FAMILIES.items():
        rng = random.Random(f"{seed}:{name}")
        failures[name] = [failure for failure in (family(rng) for _ in range(cases)) if failure]
        if failures[name]:
            logger.error(f"property {name}: {len(failures[name])} of {cases} cases failed, first: {failures[name][0]}")
        else:
            logger.debug(f"property {name}: {cases} cases passed")
    return failures
