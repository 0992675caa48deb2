# Standard Library
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# Third Party
from sympy import integer_nthroot

# First Party
from k3_verifier.constants import ALT, BFD, MAX, STD
from k3_verifier.errors import IdentityFailed, NoRescalingFound, NotDivisible, ZeroInput
from k3_verifier.exactalg import jelem, mpoly
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.exactalg.mpoly import MPoly
from k3_verifier.fibrations.classify import sample_points
from k3_verifier.fibrations.models import alt_d, model, residual_factor
from k3_verifier.fibrations.weierstrass import BASE, WeierstrassModel, short_form

logger = logging.getLogger(__name__)

J30_WEIGHT = 60
CHAIN_POINTS = 3

# modular weights: J_k has weight 2k, so a has weight 10 and the base variable weight 2
MODULAR_WEIGHTS = {"J2": 4, "J3": 6, "J4": 8, "J5": 10, "J6": 12, "a": 10}

HOLDS = "holds"
CONSTANT = "holds up to a constant"
FAILS = "fails"

DISC_D = "Disc_t D"
DISC_SMALL_D = "Disc_t d"
STD_MEMBER = "2⁴/(3¹⁸J6³⁰) Disc_t p / Res_t³(t⁻³f, t⁻⁵g)"
BFD_MEMBER = "−(J2⁹/3²¹) Disc_t P / Res_t³(t⁻²F, t⁻³G)"
CHAIN_MEMBERS = (DISC_D, DISC_SMALL_D, STD_MEMBER, BFD_MEMBER)

t = JElem.var(BASE)
J2, J3, J4, J5, J6 = (JElem.var(name) for name in ("J2", "J3", "J4", "J5", "J6"))
AA = JElem.var("a")
PSI4, PSI6, CHI10, CHI12 = (JElem.var(name) for name in ("psi4", "psi6", "chi10", "chi12"))


@dataclass(frozen=True)
class ChainMember:
    name: str
    status: str
    ratios: tuple[Fraction, ...]
    identity: bool = False

    @property
    def constant(self) -> Fraction | None:
        return self.ratios[0] if self.status == CONSTANT else None

    def detail(self) -> str:
        where = "identically" if self.identity else f"at {len(self.ratios)} points"
        if self.status == HOLDS:
            return f"equals J30 {where}"
        if self.status == CONSTANT:
            return f"equals {self.ratios[0]} * J30 {where}"
        if len(set(self.ratios)) == 1:
            return f"equals {self.ratios[0]} * J30 at {len(self.ratios)} points but not identically"
        return f"ratios to J30: {', '.join(str(ratio) for ratio in self.ratios)}"


def _poly_at(element: JElem, point: Mapping[str, Fraction]) -> MPoly:
    values = {name: point[name] for name in element.variables() if name in point}
    return element.evaluate(values).as_mpoly()


def _scalar(poly: MPoly) -> Fraction:
    return poly.constant_value()


def chain_values(point: Mapping[str, Fraction]) -> dict[str, Fraction]:
    """J30 and the three other chain members at one rational point of the a-extension."""
    f, g = short_form(model(STD))
    big_f, big_g = short_form(model(BFD))
    j2, j6 = point["J2"], point["J6"]
    j30 = _scalar(mpoly.discriminant(_poly_at(alt_d(), point), BASE))
    disc_d = _scalar(mpoly.discriminant(_poly_at(residual_factor(MAX), point), BASE))
    f_low, g_low = _poly_at(f.shift_down(BASE, 3), point), _poly_at(g.shift_down(BASE, 5), point)
    res_std = _scalar(mpoly.resultant(f_low, g_low, BASE))
    res_bfd = _scalar(
        mpoly.resultant(_poly_at(big_f.shift_down(BASE, 2), point), _poly_at(big_g.shift_down(BASE, 3), point), BASE)
    )
    disc_p = _scalar(mpoly.discriminant(_poly_at(residual_factor(STD), point), BASE))
    disc_big_p = _scalar(mpoly.discriminant(_poly_at(residual_factor(BFD), point), BASE))
    if res_std == 0 or res_bfd == 0:
        raise ZeroInput(f"a resultant of the chain vanishes at {point}")
    std_member = Fraction(16, 3**18) * disc_p / (j6**30 * res_std**3)
    return {
        DISC_D: j30,
        DISC_SMALL_D: disc_d,
        STD_MEMBER: std_member,
        BFD_MEMBER: -(j2**9) / Fraction(3**21) * disc_big_p / res_bfd**3,
    }


@lru_cache(maxsize=None)
def j30() -> JElem:
    """J30 = Disc_t D as an element of the J-ring."""
    return jelem.discriminant(alt_d(), BASE)


@lru_cache(maxsize=None)
def chain_fraction(name: str) -> tuple[JElem, JElem]:
    """(numerator, denominator) of a chain member, both polynomial in the J-parameters and a."""
    if name == DISC_D:
        return j30(), JElem(1)
    if name == DISC_SMALL_D:
        return jelem.discriminant(residual_factor(MAX), BASE), JElem(1)
    if name == STD_MEMBER:
        f, g = short_form(model(STD))
        res = jelem.resultant(f.shift_down(BASE, 3), g.shift_down(BASE, 5), BASE)
        return jelem.discriminant(residual_factor(STD), BASE) * 16, J6**30 * res**3 * 3**18
    if name == BFD_MEMBER:
        big_f, big_g = short_form(model(BFD))
        res = jelem.resultant(big_f.shift_down(BASE, 2), big_g.shift_down(BASE, 3), BASE)
        return -(J2**9) * jelem.discriminant(residual_factor(BFD), BASE), res**3 * 3**21
    raise KeyError(f"Unknown J30 chain member {name}, expected one of {', '.join(CHAIN_MEMBERS)}")


def holds_identically(name: str, constant: Fraction = Fraction(1)) -> bool:
    """member = constant * J30 in the J-ring, compared with denominators cleared."""
    numerator, denominator = chain_fraction(name)
    return numerator == j30() * denominator * constant


def j30_chain_report(points: int = CHAIN_POINTS, exact: bool = False) -> list[ChainMember]:
    """Compare every member of the J30 chain with J30 = Disc_t D at deterministic rational points.

    With ``exact`` the members that agree at the points are then compared with J30 symbolically.
    """
    names = ("J2", "J3", "J4", "J5", "J6", "a")
    collected: dict[str, list[Fraction]] = {}
    used = 0
    for point in sample_points(names):
        try:
            values = chain_values(point)
        except ZeroInput as error:
            logger.debug(f"skipping chain point: {error}")
            continue
        if values[DISC_D] == 0:
            continue
        for name, value in values.items():
            collected.setdefault(name, []).append(value / values[DISC_D])
        used += 1
        if used == points:
            break
    members = []
    for name, ratios in collected.items():
        if all(ratio == 1 for ratio in ratios):
            status = HOLDS
        elif len(set(ratios)) == 1:
            status = CONSTANT
        else:
            status = FAILS
        identity = False
        if exact and status != FAILS:
            identity = holds_identically(name, ratios[0])
            if not identity:
                status = FAILS
        member = ChainMember(name, status, tuple(ratios), identity)
        if status != HOLDS:
            logger.error(f"J30 chain member {name}: {member.detail()}")
        members.append(member)
    return members


def verify_j30_chain(points: int = CHAIN_POINTS, exact: bool = True) -> bool:
    for member in j30_chain_report(points, exact):
        if member.status != HOLDS:
            raise IdentityFailed(member.name, member.detail())
    return True


def j30_weight_ratio(scale: int = 2) -> Fraction:
    """J30 at the weight-scaled point divided by J30; equals scale^60 since J30 has modular weight 60."""
    point = next(iter(sample_points(("J2", "J3", "J4", "J5", "J6", "a"))))
    scaled = {name: value * scale ** MODULAR_WEIGHTS[name] for name, value in point.items()}
    base = _scalar(mpoly.discriminant(_poly_at(alt_d(), point), BASE))
    return _scalar(mpoly.discriminant(_poly_at(alt_d(), scaled), BASE)) / base


# extreme coefficients of the residual factors


def residual_extremes() -> dict[str, bool]:
    """Leading and trailing coefficients of p (in the conjugate convention), P and d."""
    p = residual_factor(STD).conjugate()
    big_p = residual_factor(BFD)
    d = residual_factor(MAX)
    return {
        "p leading": p.coeff(BASE, 6) == (J5**2 * (J5 + AA) - J4 * J6 * (J5 * 3 + AA)) * 2,
        "p trailing": p.coeff(BASE, 0) == J6**3 * (J5**2 * (J5 - AA) - J4 * J6 * (J5 * 3 - AA)) * 2,
        "P leading": big_p.degree(BASE) == 6 and big_p.coeff(BASE, 6) == -27,
        "d leading": d.degree(BASE) == 8 and d.coeff(BASE, 8) == AA**2,
    }


# Siegel restriction


SIEGEL_VALUES = {
    "J2": PSI4,
    "J3": PSI6,
    "J4": JElem(0),
    "J5": CHI10 * (2**12 * 3**5),
    "J6": CHI12 * (2**12 * 3**6),
    "a": CHI10 * (2**12 * 3**5),
}


def std_red() -> WeierstrassModel:
    f = -(t**3) * (PSI4 * t / 48 + CHI10 * 4)
    g = t**5 * (t**2 - PSI6 * t / 864 + CHI12)
    return WeierstrassModel.short("std_red", f, g)


def alt_red() -> WeierstrassModel:
    return WeierstrassModel("alt_red", t**3 - PSI4 * t / 48 - PSI6 / 864, -(CHI10 * t * 4 - CHI12), JElem(0))


SIEGEL_TARGETS = {BFD: std_red, ALT: alt_red, MAX: alt_red}


@dataclass(frozen=True)
class BaseRescaling:
    """(x, y, t) -> (w2 x, w2^(3/2) y, s t): coefficient a_k becomes a_k(s t) / w2^(k/2)."""

    s: JElem
    w2: JElem

    def apply(self, source: WeierstrassModel, name: str | None = None) -> WeierstrassModel:
        stretched = source.compose({source.variable: JElem.var(source.variable) * self.s})
        return WeierstrassModel(
            name or source.name,
            stretched.a2 / self.w2,
            stretched.a4 / self.w2**2,
            stretched.a6 / self.w2**3,
            source.variable,
        )


def monomial_roots(value: JElem, k: int) -> list[JElem]:
    """Rational-monomial k-th roots of a monomial ratio (both signs for even k)."""
    if value.is_zero() or value.involves_a() or len(value.p) != 1 or len(value.den) != 1:
        return []
    ((top, top_coeff),) = value.p.terms().items()
    ((bottom, bottom_coeff),) = value.den.terms().items()
    coeff = Fraction(top_coeff) / Fraction(bottom_coeff)
    exponents: dict[str, int] = {}
    for name, exponent in top:
        exponents[name] = exponents.get(name, 0) + exponent
    for name, exponent in bottom:
        exponents[name] = exponents.get(name, 0) - exponent
    if any(exponent % k for exponent in exponents.values()):
        return []
    root_coeff = _rational_root(abs(coeff), k)
    if root_coeff is None or (coeff < 0 and k % 2 == 0):
        return []
    if coeff < 0:
        root_coeff = -root_coeff
    root = JElem(root_coeff)
    for name, exponent in exponents.items():
        root = root * JElem.var(name) ** (exponent // k)
    return [root, -root] if k % 2 == 0 else [root]


def _rational_root(value: Fraction, k: int) -> Fraction | None:
    top, top_exact = integer_nthroot(value.numerator, k)
    bottom, bottom_exact = integer_nthroot(value.denominator, k)
    if not (top_exact and bottom_exact):
        return None
    return Fraction(int(top), int(bottom))


def _rescaling_candidates(source: WeierstrassModel, target: WeierstrassModel) -> list[BaseRescaling]:
    variable = source.variable
    candidates = []
    for weight, (src, dst) in zip((1, 2, 3), zip(source.coefficients(), target.coefficients())):
        if src.is_zero() or dst.is_zero():
            continue
        degrees = [n for n in range(dst.degree(variable) + 1) if not dst.coeff(variable, n).is_zero()]
        degrees = [n for n in degrees if not src.coeff(variable, n).is_zero()]
        if len(degrees) < 2:
            continue
        high, low = degrees[-1], degrees[-2]
        ratio_high = dst.coeff(variable, high) / src.coeff(variable, high)
        ratio_low = dst.coeff(variable, low) / src.coeff(variable, low)
        for s in monomial_roots(ratio_high / ratio_low, high - low):
            # s^high / w2^weight = ratio_high
            for w2 in monomial_roots(s**high / ratio_high, weight):
                candidates.append(BaseRescaling(s, w2))
    return candidates


def find_rescaling(source: WeierstrassModel, target: WeierstrassModel) -> BaseRescaling:
    for candidate in _rescaling_candidates(source, target):
        try:
            rescaled = candidate.apply(source)
        except (ZeroInput, NotDivisible):
            continue
        if rescaled.coefficients() == target.coefficients():
            return candidate
    raise NoRescalingFound(f"no rescaling (x, t) -> (w^2 x, s t) carries {source.name} to {target.name}")


@lru_cache(maxsize=None)
def siegel_restriction(which: str) -> tuple[WeierstrassModel, BaseRescaling]:
    """The model at J4 = 0 in Siegel modular forms, rescaled onto its reduced normal form."""
    if which not in SIEGEL_TARGETS:
        raise NoRescalingFound(f"no Siegel normal form is known for the {which} fibration")
    restricted = model(which).compose(SIEGEL_VALUES, name=f"{which} at J4=0")
    target = SIEGEL_TARGETS[which]()
    rescaling = find_rescaling(restricted, target)
    logger.info(f"{which} restricts to {target.name} with s = {rescaling.s}, w^2 = {rescaling.w2}")
    return rescaling.apply(restricted, target.name), rescaling


__all__ = [
    "ChainMember",
    "chain_values",
    "chain_fraction",
    "holds_identically",
    "j30",
    "j30_chain_report",
    "verify_j30_chain",
    "j30_weight_ratio",
    "residual_extremes",
    "std_red",
    "alt_red",
    "siegel_restriction",
    "find_rescaling",
    "BaseRescaling",
    "monomial_roots",
]
