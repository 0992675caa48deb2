# Standard Library
import abc
import logging
from dataclasses import dataclass
from functools import cached_property

# First Party
from k3_verifier.errors import NotDivisible, PullbackMismatch, ZeroInput
from k3_verifier.exactalg import mpoly
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.exactalg.mpoly import MPoly
from k3_verifier.fibrations.equivalence import equivalence_check
from k3_verifier.fibrations.models import model
from k3_verifier.fibrations.weierstrass import BASE, WeierstrassModel
from k3_verifier.quartic.surface import QuarticParams, params_from_J, quartic_poly

logger = logging.getLogger(__name__)

x, y, z = mpoly.symbols("x", "y", "z")
U, V = mpoly.symbols("u", "v")
T = JElem.var(BASE)


@dataclass(frozen=True)
class Substitution:
    """X, Y, W as polynomials in (x, y, z, u, v) and Z = numerator / denominator."""

    X: MPoly
    Y: MPoly
    W: MPoly
    numerator: MPoly
    denominator: MPoly

    def cleared(self, quartic: MPoly) -> MPoly:
        """denominator^2 times the quartic pulled back; the quartic is quadratic in Z."""
        if quartic.degree("Z") > 2:
            raise PullbackMismatch(f"quartic has degree {quartic.degree('Z')} in Z")
        values = {"X": self.X, "Y": self.Y, "W": self.W}
        total = MPoly.zero()
        for power in range(3):
            part = quartic.coeff("Z", power).compose(values)
            total = total + part * self.numerator**power * self.denominator ** (2 - power)
        return total


@dataclass(frozen=True)
class PulledBack:
    """cofactor * (x^3 + a2 x^2 z + a4 x z^2 + a6 z^3 - y^2 z), coefficients homogeneous in (u, v)."""

    kind: str
    cofactor: MPoly
    a2: MPoly
    a4: MPoly
    a6: MPoly

    def coefficients(self) -> tuple[MPoly, MPoly, MPoly]:
        return self.a2, self.a4, self.a6

    def model(self) -> WeierstrassModel:
        """The model in the affine coordinate u of the chart v = 1."""
        chart = [JElem.coerce(coefficient.evaluate({"v": 1})) for coefficient in self.coefficients()]
        return WeierstrassModel(self.kind, *chart, variable="u")


def weierstrass_split(kind: str, cleared: MPoly) -> PulledBack:
    """Split a cleared pullback into its cofactor and a Weierstrass cubic in x, y, z."""
    if cleared.degree("y") > 2 or not cleared.coeff("y", 1).is_zero():
        raise PullbackMismatch(f"{kind}: pullback is not of the form c (y^2 z - cubic)")
    try:
        cofactor = -mpoly.div_exact(cleared.coeff("y", 2), z)
        cubic = mpoly.div_exact(cleared.coeff("y", 0), cofactor)
    except (NotDivisible, ZeroInput) as error:
        raise PullbackMismatch(f"{kind}: pullback does not factor as cofactor times a cubic ({error})") from error
    if "y" in cofactor.variables():
        raise PullbackMismatch(f"{kind}: cofactor {cofactor} involves y")
    if cubic.coeff("x", 3) != MPoly.one():
        raise PullbackMismatch(f"{kind}: x^3 coefficient is {cubic.coeff('x', 3)}, expected 1")
    a2 = cubic.coeff("x", 2).coeff("z", 1)
    a4 = cubic.coeff("x", 1).coeff("z", 2)
    a6 = cubic.coeff("x", 0).coeff("z", 3)
    if cubic != x**3 + a2 * x**2 * z + a4 * x * z**2 + a6 * z**3:
        raise PullbackMismatch(f"{kind}: cubic {cubic} is not in Weierstrass form")
    return PulledBack(kind, cofactor, a2, a4, a6)


class FibrationDerivation(metaclass=abc.ABCMeta):
    """A substitution that turns a pencil on the quartic into a Weierstrass model."""

    kind: str
    pencil: str

    # (u, v) in terms of the base variable t, and the scale mu with derived = model(kind).rescaled(mu),
    # both after the gauge params_from_J
    @property
    @abc.abstractmethod
    def chart(self) -> tuple[JElem, JElem]:
        pass

    @property
    @abc.abstractmethod
    def scale(self) -> JElem:
        pass

    @abc.abstractmethod
    def substitution(self, params: QuarticParams) -> Substitution:
        pass

    @abc.abstractmethod
    def printed(self, params: QuarticParams) -> tuple[MPoly, MPoly, MPoly]:
        """The closed-form (a2, a4, a6) in u, v and the quartic parameters."""

    def pull_back(self, params: QuarticParams) -> PulledBack:
        quartic = quartic_poly(params).F
        pulled = weierstrass_split(self.kind, self.substitution(params).cleared(quartic))
        logger.debug(f"{self.kind}: cofactor {pulled.cofactor}")
        return pulled

    def derive(self, params: QuarticParams | None = None) -> PulledBack:
        params = params or QuarticParams.symbolic()
        pulled = self.pull_back(params)
        expected = self.printed(params)
        for label, got, want in zip(("a2", "a4", "a6"), pulled.coefficients(), expected):
            if got != want:
                raise PullbackMismatch(f"{self.kind}: derived {label} = {got} differs from {want}")
        return pulled

    @cached_property
    def j_model(self) -> WeierstrassModel:
        """The derived model dehomogenized in the chart and written over the J-ring."""
        symbolic = QuarticParams.symbolic()
        pulled = self.pull_back(symbolic)
        gauge = dict(zip(("alpha", "beta", "gamma", "delta", "epsilon", "zeta"), params_from_J().values()))
        u, v = self.chart
        mapping = {**gauge, "u": u, "v": v}
        coefficients = [JElem.coerce(coefficient).compose(mapping) for coefficient in pulled.coefficients()]
        return WeierstrassModel(f"{self.kind} from the quartic", *coefficients, variable=BASE)

    def matches_j_model(self) -> JElem:
        """Scale mu with derived = model(kind).rescaled(mu); raises Mismatch otherwise."""
        mu = equivalence_check(model(self.kind), self.j_model)
        if mu != self.scale:
            logger.warning(f"{self.kind}: rescaling {mu} differs from the recorded {self.scale}")
        return mu

