# Standard Library
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

# First Party
from k3_verifier.constants import (
    ALT,
    BFD,
    LOCUS_A0,
    LOCUS_GENERIC,
    LOCUS_J4,
    LOCUS_J30,
    LOCUS_J45,
    LOCUS_RES_ALT,
    LOCUS_RES_BFD,
    LOCUS_RES_STD,
    MAX,
    STD,
)
from k3_verifier.exactalg.jelem import JElem

logger = logging.getLogger(__name__)

t = JElem.var("t")
s = JElem.var("s")
u = JElem.var("u")
J4, J5, J6 = JElem.var("J4"), JElem.var("J5"), JElem.var("J6")


@dataclass(frozen=True)
class Locus:
    """A specialization of the J-parameters with the known fiber factors of each fibration.

    Loci of codimension one given by a resultant or J30 have no polynomial parametrization and
    are exercised at rational witnesses instead (``by_witness``).
    """

    name: str
    label: str
    picard: int
    assignment: dict[str, JElem] = field(default_factory=dict)
    skeletons: dict[str, tuple[JElem, ...]] = field(default_factory=dict)
    by_witness: bool = False

    def skeleton(self, fibration: str) -> tuple[JElem, ...]:
        if fibration not in self.skeletons:
            raise KeyError(f"locus {self.name} has no fiber skeleton for the {fibration} fibration")
        return self.skeletons[fibration]


LOCI = {
    LOCUS_GENERIC: Locus(
        LOCUS_GENERIC,
        "generic",
        16,
        {},
        {STD: (t,), ALT: (J4 * t**2 - J5 * t + J6,), BFD: (t,), MAX: ()},
    ),
    LOCUS_RES_STD: Locus(LOCUS_RES_STD, "Res_t(t⁻³f, t⁻⁵g)=0", 16, by_witness=True),
    LOCUS_RES_ALT: Locus(LOCUS_RES_ALT, "Res_t(D, E)=0", 16, by_witness=True),
    LOCUS_RES_BFD: Locus(LOCUS_RES_BFD, "Res_t(t⁻²F, t⁻³G)=0", 16, by_witness=True),
    # a = 0 forces J5^2 = 4 J4 J6, dense in the parametrization J4 = s^2, J5 = 2su, J6 = u^2
    LOCUS_A0: Locus(
        LOCUS_A0,
        "𝔞=0",
        17,
        {"J4": s**2, "J5": s * u * 2, "J6": u**2, "a": JElem(0)},
        {STD: (t,), ALT: (s * t - u,), BFD: (t,), MAX: ()},
    ),
    LOCUS_J30: Locus(LOCUS_J30, "J30=0", 17, by_witness=True),
    # the root a = J5 of a^2 = J5^2 at J4 = 0
    LOCUS_J4: Locus(
        LOCUS_J4,
        "J4=0",
        17,
        {"J4": JElem(0), "a": J5},
        {STD: (t,), ALT: (J6 - J5 * t,), BFD: (t,), MAX: (J5 * t - J6**2,)},
    ),
    LOCUS_J45: Locus(
        LOCUS_J45,
        "J4=J5=0",
        18,
        {"J4": JElem(0), "J5": JElem(0), "a": JElem(0)},
        {STD: (t,), ALT: (), BFD: (t,), MAX: ()},
    ),
}

# command line spellings
LOCUS_ALIASES = {"resDE": LOCUS_RES_ALT, "resfg": LOCUS_RES_STD, "resFG": LOCUS_RES_BFD}


def locus(name: str) -> Locus:
    name = LOCUS_ALIASES.get(name, name)
    if name not in LOCI:
        raise KeyError(f"Unknown locus {name}, expected one of {', '.join(list(LOCI) + list(LOCUS_ALIASES))}")
    return LOCI[name]


def complete_assignment(assignment: dict[str, JElem]) -> dict[str, JElem]:
    """Choose a when the assignment leaves it free: a = J5 on J4 = 0, the rational root when J4, J5, J6 are given."""
    values = dict(assignment)
    if "a" in values:
        return values
    if "J4" in values and values["J4"].is_zero():
        values["a"] = values.get("J5", J5)
        return values
    if all(name in values and values[name].is_polynomial() for name in ("J4", "J5", "J6")):
        square = values["J5"] ** 2 - 4 * values["J4"] * values["J6"]
        if square.as_mpoly().is_constant():
            root = rational_sqrt(square.as_mpoly().constant_value())
            if root is not None:
                values["a"] = JElem(root)
    return values


def rational_sqrt(value: Fraction) -> Fraction | None:
    if value < 0:
        return None
    numerator, denominator = value.numerator, value.denominator
    top, bottom = math.isqrt(numerator), math.isqrt(denominator)
    if top * top == numerator and bottom * bottom == denominator:
        return Fraction(top, bottom)
    return None


def locus_of(assignment: dict[str, JElem]) -> Locus | None:
    """The parametrized locus whose assignment is exactly ``assignment``, if any."""
    for candidate in LOCI.values():
        if candidate.by_witness or candidate.assignment.keys() != assignment.keys():
            continue
        if all(candidate.assignment[name] == value for name, value in assignment.items()):
            return candidate
    return None
