# Standard Library
import logging
import re
from collections.abc import Mapping
from dataclasses import dataclass

# First Party
from k3_verifier.errors import NoMatch, NonMinimal, ZeroPolynomial
from k3_verifier.exactalg.jelem import JElem, multiplicity_in
from k3_verifier.exactalg.mpoly import MPoly, Scalar

logger = logging.getLogger(__name__)

BASE = "t"

# Section weights of a Weierstrass model over P^1 for a K3 surface.
A2_WEIGHT, A4_WEIGHT, A6_WEIGHT = 4, 8, 12
F_WEIGHT, G_WEIGHT, DISC_WEIGHT = 8, 12, 24

# Stands in for the order of an identically vanishing coefficient.
INFINITE_ORDER = 1000

_IN = re.compile(r"^I(\d+)$")
_IN_STAR = re.compile(r"^I(\d+)\*$")

_SPORADIC_EULER = {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}
_SPORADIC_ADE = {"II": "", "III": "A1", "IV": "A2", "IV*": "E6", "III*": "E7", "II*": "E8"}


def euler_number(kodaira: str) -> int:
    if match := _IN.match(kodaira):
        return int(match.group(1))
    if match := _IN_STAR.match(kodaira):
        return int(match.group(1)) + 6
    if kodaira in _SPORADIC_EULER:
        return _SPORADIC_EULER[kodaira]
    raise NoMatch(f"unknown Kodaira type {kodaira}")


def ade_label(kodaira: str) -> str:
    """Root lattice of the fiber components missing the zero section ("" for irreducible fibers)."""
    if match := _IN.match(kodaira):
        size = int(match.group(1))
        return f"A{size - 1}" if size >= 2 else ""
    if match := _IN_STAR.match(kodaira):
        return f"D{int(match.group(1)) + 4}"
    if kodaira in _SPORADIC_ADE:
        return _SPORADIC_ADE[kodaira]
    raise NoMatch(f"unknown Kodaira type {kodaira}")


def root_rank(kodaira: str) -> int:
    label = ade_label(kodaira)
    return int(label[1:]) if label else 0


def kodaira_from_orders(a: int, b: int, c: int) -> str:
    """Kodaira type from the vanishing orders of f, g and the discriminant at a place."""
    if a >= 4 and b >= 6:
        raise NonMinimal(f"orders ({a}, {b}, {c}) are not minimal, rescale f by s^-4 and g by s^-6")
    if c == 0:
        return "I0"
    if a == 0 and b == 0:
        return f"I{c}"
    if a >= 1 and b == 1 and c == 2:
        return "II"
    if a == 1 and b >= 2 and c == 3:
        return "III"
    if a >= 2 and b == 2 and c == 4:
        return "IV"
    if a >= 2 and b >= 3 and c == 6:
        return "I0*"
    if a == 2 and b == 3 and c > 6:
        return f"I{c - 6}*"
    if a >= 3 and b == 4 and c == 8:
        return "IV*"
    if a == 3 and b >= 5 and c == 9:
        return "III*"
    if a >= 4 and b == 5 and c == 10:
        return "II*"
    raise NoMatch(f"orders ({a}, {b}, {c}) match no Kodaira type")


@dataclass(frozen=True)
class WeierstrassModel:
    """y^2 = x^3 + a2 x^2 + a4 x + a6 with coefficients polynomial in the base variable."""

    name: str
    a2: JElem
    a4: JElem
    a6: JElem
    variable: str = BASE

    @classmethod
    def short(cls, name: str, f: JElem, g: JElem, variable: str = BASE) -> "WeierstrassModel":
        return cls(name, JElem(0), JElem.coerce(f), JElem.coerce(g), variable)

    def is_short(self) -> bool:
        return self.a2.is_zero()

    def coefficients(self) -> tuple[JElem, JElem, JElem]:
        return self.a2, self.a4, self.a6

    def parameters(self) -> tuple[str, ...]:
        names = set()
        for coeff in self.coefficients():
            names.update(coeff.variables())
        names.discard(self.variable)
        return tuple(sorted(names))

    def is_rational(self) -> bool:
        return not self.parameters()

    def compose(self, mapping: Mapping[str, JElem | MPoly | Scalar], name: str | None = None) -> "WeierstrassModel":
        return WeierstrassModel(
            name or self.name,
            self.a2.compose(mapping),
            self.a4.compose(mapping),
            self.a6.compose(mapping),
            self.variable,
        )

    def rescaled(self, mu: JElem | Scalar) -> "WeierstrassModel":
        """The model after x -> mu*x, y -> mu^(3/2)*y."""
        mu = JElem.coerce(mu)
        return WeierstrassModel(self.name, self.a2 * mu, self.a4 * mu**2, self.a6 * mu**3, self.variable)

    def degree_violations(self) -> list[str]:
        violations = []
        weighted = (("a2", self.a2, A2_WEIGHT), ("a4", self.a4, A4_WEIGHT), ("a6", self.a6, A6_WEIGHT))
        for label, coeff, weight in weighted:
            if not coeff.is_zero() and coeff.degree(self.variable) > weight:
                violations.append(f"deg {label} = {coeff.degree(self.variable)} > {weight}")
        return violations

    def to_text(self) -> str:
        terms = ["x^3"]
        if not self.a2.is_zero():
            terms.append(f"({self.a2})*x^2")
        if not self.a4.is_zero():
            terms.append(f"({self.a4})*x")
        if not self.a6.is_zero():
            terms.append(f"({self.a6})")
        return "y^2 = " + " + ".join(terms)

    def __str__(self) -> str:
        return f"{self.name}: {self.to_text()}"


def short_form(model: WeierstrassModel) -> tuple[JElem, JElem]:
    """(f, g) of the depressed cubic x -> x - a2/3."""
    a2, a4, a6 = model.coefficients()
    if a2.is_zero():
        return a4, a6
    f = a4 - a2**2 / 3
    g = a6 - a2 * a4 / 3 + a2**3 * 2 / 27
    return f, g


def cubic_discriminant(a2: JElem, a4: JElem, a6: JElem) -> JElem:
    """b^2(a^2 - 4b) - 2ac(2a^2 - 9b) - 27c^2, the discriminant of x^3 + a x^2 + b x + c."""
    a2, a4, a6 = JElem.coerce(a2), JElem.coerce(a4), JElem.coerce(a6)
    if a6.is_zero():
        return a4**2 * (a2**2 - a4 * 4)
    return a4**2 * (a2**2 - a4 * 4) - a2 * a6 * (a2**2 * 2 - a4 * 9) * 2 - a6**2 * 27


def short_discriminant(f: JElem, g: JElem) -> JElem:
    """4f^3 + 27g^2; equals minus the cubic discriminant of x^3 + f x + g."""
    return f**3 * 4 + g**2 * 27


def weierstrass_disc(model: WeierstrassModel) -> JElem:
    """Cubic discriminant of the model, which is -(4f^3 + 27g^2) in terms of the short form.

    This sign is the one the residual factors p, P, D and d are normalized against, so
    ``residual_factor`` and the J30 chain constants assume it. Vanishing orders are the same
    under either sign.
    """
    logger.debug(f"discriminant of the {model.name} model")
    return cubic_discriminant(*model.coefficients())


def discriminant_conventions_agree(model: WeierstrassModel) -> bool:
    f, g = short_form(model)
    disc = weierstrass_disc(model)
    return disc == cubic_discriminant(JElem(0), f, g) and disc == -short_discriminant(f, g)


@dataclass(frozen=True)
class FiberPlace:
    """A finite place given by a factor of the discriminant, or the place at infinity."""

    factor: JElem | None = None

    @classmethod
    def infinity(cls) -> "FiberPlace":
        return cls(None)

    @classmethod
    def root_of(cls, factor: JElem | MPoly) -> "FiberPlace":
        return cls(JElem.coerce(factor))

    @property
    def is_infinity(self) -> bool:
        return self.factor is None

    def degree(self, variable: str = BASE) -> int:
        return 1 if self.factor is None else self.factor.degree(variable)

    def label(self) -> str:
        return "∞" if self.factor is None else f"{self.factor} = 0"


def _order(place: FiberPlace, poly: JElem, weight: int, variable: str) -> int:
    if poly.is_zero():
        return INFINITE_ORDER
    if place.is_infinity:
        return weight - poly.degree(variable)
    return multiplicity_in(variable, place.factor, poly)


def vanishing_orders(
    model: WeierstrassModel,
    place: FiberPlace,
    short: tuple[JElem, JElem] | None = None,
    disc: JElem | None = None,
) -> tuple[int, int, int]:
    """Orders of f, g and the discriminant at ``place``; at infinity via the weights 8, 12, 24."""
    f, g = short or short_form(model)
    disc = weierstrass_disc(model) if disc is None else disc
    if disc.is_zero():
        raise ZeroPolynomial(f"the {model.name} model has zero discriminant")
    variable = model.variable
    return (
        _order(place, f, F_WEIGHT, variable),
        _order(place, g, G_WEIGHT, variable),
        _order(place, disc, DISC_WEIGHT, variable),
    )
