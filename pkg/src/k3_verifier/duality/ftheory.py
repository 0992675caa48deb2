# Standard Library
import logging
from collections.abc import Mapping
from dataclasses import dataclass

# First Party
from k3_verifier.constants import ALT, BFD
from k3_verifier.errors import MatchFailed, NoRescalingFound
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.fibrations.identities import find_rescaling
from k3_verifier.fibrations.models import model
from k3_verifier.fibrations.weierstrass import BASE, WeierstrassModel

logger = logging.getLogger(__name__)

J_NAMES = ("J2", "J3", "J4", "J5", "J6")
J_WEIGHTS = {"J2": 2, "J3": 3, "J4": 4, "J5": 5, "J6": 6}
LAMBDA = "lam"

t = JElem.var(BASE)


@dataclass(frozen=True)
class DualityParams:
    """Coefficients of the F-theory form dual to the E8 x E8 heterotic string; a = -3d^2 and b = -2d^3."""

    a: JElem
    b: JElem
    c: JElem
    d: JElem
    e: JElem
    f: JElem
    g: JElem
    lam: JElem

    def __post_init__(self):
        if self.a != -3 * self.d**2 or self.b != -2 * self.d**3:
            raise MatchFailed("duality parameters must satisfy a = -3d^2 and b = -2d^3")

    @classmethod
    def from_j(cls, j: Mapping[str, JElem] | None = None, lam: JElem | int = 1) -> "DualityParams":
        values = {name: JElem.var(name) for name in J_NAMES}
        values.update({name: JElem.coerce(value) for name, value in (j or {}).items()})
        lam = JElem.coerce(lam)
        d = -(lam**8) * values["J4"] / 3
        return cls(
            a=-3 * d**2,
            b=-2 * d**3,
            c=-(lam**10) * values["J5"],
            d=d,
            e=-3 * lam**4 * values["J2"],
            f=lam**12 * values["J6"],
            g=-2 * lam**6 * values["J3"],
            lam=lam,
        )


def ftheory_e8_form(j: Mapping[str, JElem] | None = None, lam: JElem | int = 1) -> WeierstrassModel:
    """Y^2 = X^3 + (a t^2 + c t^3 + e t^4) X + b t^3 + cd t^4 + (de + f) t^5 + g t^6 + t^7."""
    p = DualityParams.from_j(j, lam)
    form = WeierstrassModel.short(
        "e8 x e8 form",
        p.a * t**2 + p.c * t**3 + p.e * t**4,
        p.b * t**3 + p.c * p.d * t**4 + (p.d * p.e + p.f) * t**5 + p.g * t**6 + t**7,
    )
    if JElem.coerce(lam) == 1 and j is None:
        _match(form, model(BFD))
    return form


def ftheory_so32_form(j: Mapping[str, JElem] | None = None, lam: JElem | int = 1) -> WeierstrassModel:
    """Y^2 = X^3 + (t^3 + e t + g) X^2 + (-3d t^2 + c t + f) X."""
    p = DualityParams.from_j(j, lam)
    form = WeierstrassModel("so(32) form", t**3 + p.e * t + p.g, -3 * p.d * t**2 + p.c * t + p.f, JElem(0))
    if JElem.coerce(lam) == 1 and j is None:
        _match(form, model(ALT))
    return form


def _match(form: WeierstrassModel, target: WeierstrassModel) -> None:
    for label, got, want in zip(("a2", "a4", "a6"), form.coefficients(), target.coefficients()):
        if got != want:
            raise MatchFailed(f"{form.name}: {label} = {got} differs from the {target.name} model ({want})")
    logger.debug(f"{form.name} agrees with the {target.name} model")


def weight_scaled(source: WeierstrassModel, scale: JElem) -> WeierstrassModel:
    """J_k -> scale^k J_k."""
    return source.compose({name: JElem.var(name) * scale**weight for name, weight in J_WEIGHTS.items()})


def lambda_weight_check() -> dict[str, bool]:
    """The lambda-dependence is the weight scaling J_k -> lam^(2k) J_k, itself a Weierstrass rescaling."""
    lam = JElem.var(LAMBDA)
    results = {}
    for which, build in ((BFD, ftheory_e8_form), (ALT, ftheory_so32_form)):
        form = build(lam=lam)
        scaled = weight_scaled(model(which), lam**2)
        results[f"{form.name} is the weight scaling of {which}"] = form.coefficients() == scaled.coefficients()
        try:
            find_rescaling(model(which), form)
            results[f"{form.name} is a rescaling of {which}"] = True
        except NoRescalingFound as error:
            logger.error(f"{error}")
            results[f"{form.name} is a rescaling of {which}"] = False
    return results
