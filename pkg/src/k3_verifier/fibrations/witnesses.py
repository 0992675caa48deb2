# Standard Library
import itertools
import logging
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# First Party
from k3_verifier.constants import (
    ALT,
    BFD,
    FIBRATIONS,
    LOCUS_A0,
    LOCUS_J30,
    LOCUS_RES_ALT,
    LOCUS_RES_BFD,
    LOCUS_RES_STD,
    MAX,
    STD,
)
from k3_verifier.errors import BadQuintic, VerificationError, WitnessNotFound
from k3_verifier.exactalg.mpoly import MPoly
from k3_verifier.fibrations.classify import rational_places, specialize
from k3_verifier.fibrations.loci import LOCUS_ALIASES, rational_sqrt
from k3_verifier.fibrations.models import model
from k3_verifier.fibrations.weierstrass import (
    FiberPlace,
    WeierstrassModel,
    kodaira_from_orders,
    vanishing_orders,
    weierstrass_disc,
)

logger = logging.getLogger(__name__)

J_NAMES = ("J2", "J3", "J4", "J5", "J6")

# distinct singular fibers of the generic member: skeleton places, infinity and the I1 fibers
GENERIC_PLACES = {STD: 8, ALT: 9, BFD: 8, MAX: 9}

CHECKED_FIBRATIONS = {
    LOCUS_RES_STD: (STD,),
    LOCUS_RES_ALT: (ALT,),
    LOCUS_RES_BFD: (BFD,),
    LOCUS_J30: FIBRATIONS,
    LOCUS_A0: (ALT, BFD, MAX),
}

_SMALL = (1, 2, -1, 3, -2)


@dataclass(frozen=True)
class Witness:
    locus: str
    values: tuple[tuple[str, Fraction], ...]

    def assignment(self) -> dict[str, Fraction]:
        return dict(self.values)

    def j_tuple(self) -> tuple[Fraction, ...]:
        values = self.assignment()
        return tuple(values[name] for name in J_NAMES)

    def describe(self) -> str:
        return ", ".join(f"{name}={value}" for name, value in self.values)


def _witness(locus: str, j2, j3, j4, j5, j6, a) -> Witness:
    values = (("J2", j2), ("J3", j3), ("J4", j4), ("J5", j5), ("J6", j6), ("a", a))
    return Witness(locus, tuple((name, Fraction(value)) for name, value in values))


def witness_from_D(D: MPoly, variable: str = "t") -> tuple[Fraction, ...]:
    """Solve D = t^6 - 6J2 t^4 - 4J3 t^3 + (9J2^2 - 4J4) t^2 + (12J2J3 + 4J5) t + 4(J3^2 - J6) for J."""
    if set(D.variables()) - {variable}:
        raise BadQuintic(f"{D} is not a rational polynomial in {variable}")
    if D.degree(variable) != 6 or D.coeff(variable, 6) != 1:
        raise BadQuintic(f"{D} is not monic of degree six")
    c5, c4, c3, c2, c1, c0 = (D.coeff(variable, power).constant_value() for power in (5, 4, 3, 2, 1, 0))
    if c5 != 0:
        raise BadQuintic(f"t^5 coefficient {c5} is not zero")
    j2 = -c4 / 6
    j3 = -c3 / 4
    j4 = (9 * j2**2 - c2) / 4
    j5 = (c1 - 12 * j2 * j3) / 4
    j6 = j3**2 - c0 / 4
    return j2, j3, j4, j5, j6


# candidate streams, one per locus


def _res_std_candidates() -> Iterator[Witness]:
    # common root r of t^-3 f and t^-5 g, with f = -t^3 (c2 t^2 + 3 J2 t + c0)
    for r, c0, c2, j3 in itertools.product((1, 2, 3), _SMALL, _SMALL, _SMALL):
        j6 = 2 * j3 * r - r * r
        if j6 == 0:
            continue
        j2 = Fraction(-(c2 * r * r + c0), 3 * r)
        yield _witness(LOCUS_RES_STD, j2, j3, c0 * c2, c0 + c2 * j6, j6, c0 - c2 * j6)


def _res_alt_candidates() -> Iterator[Witness]:
    # E(r) = 0 fixes J6 and then D(r) = A(r)^2 vanishes with A(r)
    for r, j2, j4, j5 in itertools.product((1, 2, -1, 3), _SMALL, _SMALL, _SMALL):
        j3 = Fraction(r**3 - 3 * j2 * r, 2)
        j6 = j5 * r - j4 * r * r
        yield from _with_rational_a(LOCUS_RES_ALT, j2, j3, j4, j5, j6)


def _res_bfd_candidates() -> Iterator[Witness]:
    for r, j2, j3, j4 in itertools.product((1, 2, -1, 3), _SMALL, _SMALL, _SMALL):
        j5 = (-3 * j2 * r * r - Fraction(j4 * j4, 3)) / r
        j6 = -(r**4 - 2 * j3 * r**3 + j2 * j4 * r * r + j4 * j5 * r / 3 + Fraction(2 * j4**3, 27)) / (r * r)
        yield from _with_rational_a(LOCUS_RES_BFD, j2, j3, j4, j5, j6)


def _j30_candidates() -> Iterator[Witness]:
    # D = A^2 - 4B with a double root at r and B = J4 (t - r + x)(t - r + y) split, so that a = J4 (y - x)
    for r, j2, j3, x in itertools.product((1, 2, -1, 3), _SMALL, _SMALL, (1, 2, -1, 3, -2)):
        a_r = Fraction(r**3 - 3 * j2 * r - 2 * j3)
        slope = Fraction(3 * r * r - 3 * j2)
        if a_r == 0 or slope == 0 or 2 * x * slope == a_r:
            continue
        # D(r) = 0 and D'(r) = 0 read J4 x y = A(r)^2 / 4 and J4 (x + y) = A(r) A'(r) / 2
        y = a_r * x / (2 * x * slope - a_r)
        if x + y == 0:
            continue
        j4 = a_r * slope / (2 * (x + y))
        first, second = r - x, r - y
        yield _witness(LOCUS_J30, j2, j3, j4, j4 * (first + second), j4 * first * second, j4 * (first - second))


def _a0_candidates() -> Iterator[Witness]:
    for s, u, j2, j3 in itertools.product((1, 2, -1), (1, 2, 3, -1), _SMALL, _SMALL):
        yield _witness(LOCUS_A0, j2, j3, s * s, 2 * s * u, u * u, 0)


def _with_rational_a(locus, j2, j3, j4, j5, j6) -> Iterator[Witness]:
    square = Fraction(j5) ** 2 - 4 * Fraction(j4) * Fraction(j6)
    root = rational_sqrt(square)
    if root is not None:
        yield _witness(locus, j2, j3, j4, j5, j6, root)


_CANDIDATES = {
    LOCUS_RES_STD: _res_std_candidates,
    LOCUS_RES_ALT: _res_alt_candidates,
    LOCUS_RES_BFD: _res_bfd_candidates,
    LOCUS_J30: _j30_candidates,
    LOCUS_A0: _a0_candidates,
}


# acceptance


def singular_places(specialized: WeierstrassModel) -> int:
    """Number of singular fibers over the algebraic closure, infinity included."""
    disc = weierstrass_disc(specialized)
    places = sum(factor.degree(specialized.variable) for factor in rational_places(disc, specialized.variable))
    infinity = vanishing_orders(specialized, FiberPlace.infinity(), disc=disc)
    return places + (0 if kodaira_from_orders(*infinity) == "I0" else 1)


def avoids_other_loci(candidate: Witness) -> bool:
    values = candidate.assignment()
    if values["J4"] == 0 or values["J6"] == 0:
        return False
    return (values["a"] == 0) == (candidate.locus == LOCUS_A0)


def is_locus_generic(candidate: Witness) -> bool:
    """Each checked fibration loses exactly one singular fiber, two of them having merged."""
    if not avoids_other_loci(candidate):
        return False
    for which in CHECKED_FIBRATIONS[candidate.locus]:
        try:
            specialized = specialize(model(which), candidate.assignment())
            places = singular_places(specialized)
        except VerificationError as error:
            logger.debug(f"candidate {candidate.describe()} rejected on {which}: {error}")
            return False
        if places != GENERIC_PLACES[which] - 1:
            logger.debug(f"candidate {candidate.describe()} has {places} singular fibers on {which}")
            return False
    return True


@lru_cache(maxsize=None)
def witness(locus: str) -> Witness:
    """First rational point of the locus, in scan order, that is generic on it."""
    locus = LOCUS_ALIASES.get(locus, locus)
    if locus not in _CANDIDATES:
        raise WitnessNotFound(f"no witness search for locus {locus}, expected one of {', '.join(_CANDIDATES)}")
    for candidate in _CANDIDATES[locus]():
        if is_locus_generic(candidate):
            logger.info(f"witness for {locus}: {candidate.describe()}")
            return candidate
    raise WitnessNotFound(f"the scan found no generic rational point on {locus}")
