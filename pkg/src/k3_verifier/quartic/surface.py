# Standard Library
import logging
from collections.abc import Mapping
from dataclasses import dataclass, fields
from fractions import Fraction

# First Party
from k3_verifier.errors import DegenerateJ4
from k3_verifier.exactalg import mpoly
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.exactalg.mpoly import MPoly, Scalar

logger = logging.getLogger(__name__)

PARAM_NAMES = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta")
COORDINATES = ("X", "Y", "Z", "W")

X, Y, Z, W = mpoly.symbols(*COORDINATES)

Coefficient = MPoly | JElem | Fraction | int


@dataclass(frozen=True)
class QuarticParams:
    """The six parameters of the quartic normal form, symbolic or rational."""

    alpha: Coefficient
    beta: Coefficient
    gamma: Coefficient
    delta: Coefficient
    epsilon: Coefficient
    zeta: Coefficient

    @classmethod
    def symbolic(cls) -> "QuarticParams":
        return cls(*mpoly.symbols(*PARAM_NAMES))

    @classmethod
    def from_values(cls, values) -> "QuarticParams":
        values = list(values)
        if len(values) != len(PARAM_NAMES):
            raise ValueError(f"Expected {len(PARAM_NAMES)} parameters, got {len(values)}")
        return cls(*(Fraction(value) for value in values))

    def values(self) -> tuple[Coefficient, ...]:
        return tuple(getattr(self, field.name) for field in fields(self))

    def is_polynomial(self) -> bool:
        return all(not isinstance(value, JElem) or value.is_polynomial() for value in self.values())

    def as_mpolys(self) -> tuple[MPoly, ...]:
        return tuple(value.as_mpoly() if isinstance(value, JElem) else MPoly.coerce(value) for value in self.values())

    def mapping(self) -> dict[str, Coefficient]:
        return dict(zip(PARAM_NAMES, self.values()))

    def swapped(self) -> "QuarticParams":
        """(gamma, delta) exchanged with (epsilon, zeta)."""
        return QuarticParams(self.alpha, self.beta, self.epsilon, self.zeta, self.gamma, self.delta)

    def scaled(self, t: Coefficient) -> "QuarticParams":
        """(t^2 alpha, t^3 beta, t^5 gamma, t^6 delta, t^-1 epsilon, zeta)."""
        t = JElem.coerce(t)
        alpha, beta, gamma, delta, epsilon, zeta = (JElem.coerce(value) for value in self.values())
        return QuarticParams(t**2 * alpha, t**3 * beta, t**5 * gamma, t**6 * delta, epsilon / t, zeta)

    def is_polarizing(self) -> bool:
        _, _, gamma, delta, epsilon, zeta = self.values()
        return not (_is_zero(gamma) and _is_zero(delta)) and not (_is_zero(epsilon) and _is_zero(zeta))


def _is_zero(value: Coefficient) -> bool:
    if isinstance(value, MPoly | JElem):
        return value.is_zero()
    return value == 0


@dataclass(frozen=True)
class QuarticSurface:
    params: QuarticParams
    F: MPoly

    def vanishes_at(self, point: Mapping[str, MPoly | Scalar]) -> bool:
        return self.F.compose(dict(point)).is_zero()

    def gradient(self) -> tuple[MPoly, ...]:
        return tuple(self.F.diff(name) for name in COORDINATES)

    def is_singular_at(self, point: tuple[Scalar, ...]) -> bool:
        values = dict(zip(COORDINATES, point))
        return self.vanishes_at(values) and all(part.evaluate(values).is_zero() for part in self.gradient())


def quartic_form(params: QuarticParams, coordinates=None):
    """The quartic in the given coordinates; works over MPoly and JElem alike."""
    alpha, beta, gamma, delta, epsilon, zeta = params.values()
    x, y, z, w = coordinates if coordinates is not None else (X, Y, Z, W)
    return (
        y**2 * z * w
        - 4 * x**3 * z
        + 3 * alpha * x * z * w**2
        + beta * z * w**3
        + gamma * x * z**2 * w
        - (delta * z**2 * w**2 + zeta * w**4) * Fraction(1, 2)
        + epsilon * x * w**3
    )


def quartic_poly(params: QuarticParams) -> QuarticSurface:
    params = QuarticParams(*params.as_mpolys())
    return QuarticSurface(params, quartic_form(params))


# special points, lines and residual curves

P1 = (0, 1, 0, 0)
P2 = (0, 0, 1, 0)


@dataclass(frozen=True)
class ParametrizedCurve:
    """A curve on P^3 given by polynomial coordinates in the parameters (s, q)."""

    name: str
    coordinates: tuple[MPoly, MPoly, MPoly, MPoly]

    def mapping(self) -> dict[str, MPoly]:
        return dict(zip(COORDINATES, self.coordinates))

    def contained_in(self, poly: MPoly) -> bool:
        return poly.compose(self.mapping()).is_zero()

    def passes_through(self, point: tuple[Scalar, ...], at: Mapping[str, Scalar]) -> bool:
        values = [coordinate.evaluate(dict(at)) for coordinate in self.coordinates]
        if all(value.is_zero() for value in values):
            return False
        target = [MPoly.coerce(value) for value in point]
        return all((values[i] * target[j] - values[j] * target[i]).is_zero() for i in range(4) for j in range(4))


S, R = mpoly.symbols("s", "q")


def lines(params: QuarticParams) -> dict[str, ParametrizedCurve]:
    """L1: X = W = 0, L2: Z = W = 0, L3: 2 epsilon X - zeta W = Z = 0."""
    _, _, _, _, epsilon, zeta = params.as_mpolys()
    zero = MPoly.zero()
    return {
        "L1": ParametrizedCurve("L1", (zero, R, S, zero)),
        "L2": ParametrizedCurve("L2", (S, R, zero, zero)),
        "L3": ParametrizedCurve("L3", (zeta * S, R, zero, 2 * epsilon * S)),
    }


def residual_curves(params: QuarticParams) -> dict[str, ParametrizedCurve]:
    """The conic R1 in the plane 2 epsilon X = zeta W and the cubic R2 in the plane 2 gamma X = delta W."""
    alpha, beta, gamma, delta, epsilon, zeta = params.as_mpolys()
    # R1: the quadric (3 alpha eps^2 zeta + 2 beta eps^3 - zeta^3) W^2
    #     - eps^2 (delta eps - gamma zeta) Z W + 2 eps^3 Y^2
    k1 = 3 * alpha * epsilon**2 * zeta + 2 * beta * epsilon**3 - zeta**3
    d1 = delta * epsilon - gamma * zeta
    r1 = (
        zeta * epsilon**2 * d1 * R**2,
        2 * epsilon**3 * d1 * S * R,
        2 * epsilon * (k1 * R**2 + 2 * epsilon**3 * S**2),
        2 * epsilon**3 * d1 * R**2,
    )
    # R2: the cubic (3 alpha gamma^2 delta + 2 beta gamma^3 - delta^3) Z W^2
    #     - gamma^2 (gamma zeta - delta eps) W^3 + 2 gamma^3 Y^2 Z
    k2 = 3 * alpha * gamma**2 * delta + 2 * beta * gamma**3 - delta**3
    d2 = gamma * zeta - delta * epsilon
    quad = k2 * R**2 + 2 * gamma**3 * S**2
    r2 = (
        delta * R * quad,
        2 * gamma * S * quad,
        2 * gamma**3 * d2 * R**3,
        2 * gamma * R * quad,
    )
    return {"R1": ParametrizedCurve("R1", r1), "R2": ParametrizedCurve("R2", r2)}


def curves(params: QuarticParams) -> dict[str, ParametrizedCurve]:
    return {**lines(params), **residual_curves(params)}


def lines_concurrent_at_p1(params: QuarticParams) -> bool:
    """Each line passes through P1 = [0:1:0:0]; L2 and L3 coincide when epsilon = 0."""
    through = all(curve.passes_through(P1, {"s": 0, "q": 1}) for curve in lines(params).values())
    return through and not params.as_mpolys()[4].is_zero()


# moduli


@dataclass(frozen=True)
class JPoint:
    """[J2 : J3 : J4 : J5 : J6] in WP(2,3,4,5,6); ``degenerate`` when (J3, J4, J5) = 0."""

    values: tuple[JElem, JElem, JElem, JElem, JElem]

    WEIGHTS = (2, 3, 4, 5, 6)

    @property
    def degenerate(self) -> bool:
        return all(value.is_zero() for value in self.values[1:4])

    def scaled(self, t: Coefficient) -> "JPoint":
        t = JElem.coerce(t)
        return JPoint(tuple(value * t**weight for value, weight in zip(self.values, self.WEIGHTS)))

    def mapping(self) -> dict[str, JElem]:
        return dict(zip(("J2", "J3", "J4", "J5", "J6"), self.values))


def params_to_J(params: QuarticParams) -> JPoint:
    alpha, beta, gamma, delta, epsilon, zeta = (JElem.coerce(value) for value in params.values())
    point = JPoint((alpha, beta, gamma * epsilon, gamma * zeta + delta * epsilon, delta * zeta))
    if point.degenerate:
        logger.warning(f"parameters {params} give the degenerate point (J3, J4, J5) = 0")
    return point


def params_from_J(j: Mapping[str, Coefficient] | None = None, a: Coefficient | None = None) -> QuarticParams:
    """Gauge gamma = 1, epsilon = J4, zeta = (J5 + a)/2, delta = (J5 - a)/(2 J4)."""
    names = ("J2", "J3", "J4", "J5", "J6")
    values = {name: JElem.var(name) for name in names}
    if j is not None:
        values.update({name: JElem.coerce(value) for name, value in j.items()})
    a = JElem.var("a") if a is None else JElem.coerce(a)
    if values["J4"].is_zero():
        raise DegenerateJ4("the gauge epsilon = J4 needs J4 != 0")
    return QuarticParams(
        values["J2"],
        values["J3"],
        JElem(1),
        (values["J5"] - a) / (values["J4"] * 2),
        values["J4"],
        (values["J5"] + a) / 2,
    )
