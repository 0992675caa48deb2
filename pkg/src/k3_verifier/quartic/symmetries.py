# Standard Library
import logging
from dataclasses import dataclass

# First Party
from k3_verifier.constants import ALT
from k3_verifier.errors import IdentityFailed
from k3_verifier.exactalg import mpoly
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.exactalg.mpoly import MPoly
from k3_verifier.fibrations.models import model
from k3_verifier.quartic.surface import (
    COORDINATES,
    P1,
    P2,
    QuarticParams,
    params_to_J,
    quartic_form,
    quartic_poly,
)

logger = logging.getLogger(__name__)

X, Y, Z, W = mpoly.symbols(*COORDINATES)
JX, JY, JZ, JW = (JElem.var(name) for name in COORDINATES)


def _check(results: dict[str, bool]) -> dict[str, bool]:
    for name, holds in results.items():
        if not holds:
            raise IdentityFailed(name)
    return results


# parameter symmetries


def verify_param_symmetries(params: QuarticParams | None = None) -> dict[str, bool]:
    """The weighted scaling and the (gamma, delta) <-> (epsilon, zeta) swap preserve the family.

    Scaling: with t = q^2 and phi = [q^8 X : q^9 Y : Z : q^6 W], Q_{scaled}(phi) = t^12 Q.
    Swap: Q(XZ, YZ, W^2, ZW) = Z^2 W^2 Q_{swapped}. J is weighted-homogeneous under the first
    and invariant under the second.
    """
    params = params or QuarticParams.symbolic()
    q = JElem.var("q")
    scaled = params.scaled(q**2)
    original = quartic_form(params, (JX, JY, JZ, JW))
    moved = quartic_form(scaled, (q**8 * JX, q**9 * JY, JZ, q**6 * JW))

    base = quartic_poly(params)
    swapped = quartic_poly(params.swapped())
    swap_image = base.F.compose({"X": X * Z, "Y": Y * Z, "Z": W**2, "W": Z * W})

    results = {
        "scaling preserves the quartic": moved == q**24 * original,
        "J is weighted under scaling": params_to_J(scaled).values == params_to_J(params).scaled(q**2).values,
        "swap preserves the quartic": swap_image == Z**2 * W**2 * swapped.F,
        "J is swap invariant": params_to_J(params.swapped()).values == params_to_J(params).values,
    }
    return _check(results)


# Nikulin involution


@dataclass(frozen=True)
class RationalMap:
    """A rational self-map of P^3 by four polynomial components."""

    name: str
    components: tuple[MPoly, MPoly, MPoly, MPoly]

    def mapping(self) -> dict[str, MPoly]:
        return dict(zip(COORDINATES, self.components))

    def pull_back(self, poly: MPoly) -> MPoly:
        return poly.compose(self.mapping())

    def then(self, other: "RationalMap") -> "RationalMap":
        return RationalMap(f"{other.name}.{self.name}", tuple(other.pull_back(c) for c in self.components))

    def base_point(self, point: tuple[int, ...]) -> bool:
        values = dict(zip(COORDINATES, point))
        return all(component.evaluate(values).is_zero() for component in self.components)


def nikulin_psi(params: QuarticParams, printed: bool = False) -> RationalMap:
    """Psi = [L X Z : -L Y Z : M W^2 : L Z W] with L = 2 gamma X - delta W, M = 2 epsilon X - zeta W.

    ``printed=True`` returns the variant with last component L Z^2, which does not preserve the quartic.
    """
    _, _, gamma, delta, epsilon, zeta = params.as_mpolys()
    L = 2 * gamma * X - delta * W
    M = 2 * epsilon * X - zeta * W
    last = L * Z**2 if printed else L * Z * W
    return RationalMap("psi-printed" if printed else "psi", (L * X * Z, -L * Y * Z, M * W**2, last))


def nikulin_involution_verify(params: QuarticParams | None = None) -> dict[str, bool]:
    """Psi preserves the quartic, squares to the identity, fixes the 2-form and has base points P1, P2."""
    params = params or QuarticParams.symbolic()
    surface = quartic_poly(params)
    psi = nikulin_psi(params)
    _, _, gamma, delta, epsilon, zeta = params.as_mpolys()
    L = 2 * gamma * X - delta * W
    M = 2 * epsilon * X - zeta * W
    factor = L**3 * M * Z**2 * W**2

    square = psi.then(psi)
    identity_image = all(
        component == factor * coordinate for component, coordinate in zip(square.components, (X, Y, Z, W))
    )
    results = {
        "psi preserves the quartic": psi.pull_back(surface.F) == factor * surface.F,
        "psi is an involution": identity_image,
        "psi is symplectic": _preserves_two_form(params),
        "P1 and P2 are base points": psi.base_point(P1) and psi.base_point(P2),
    }
    return _check(results)


def _preserves_two_form(params: QuarticParams) -> bool:
    """In the chart W = 1, Psi is (x, -y, M/(L z)); with omega = dx dy / F_z this needs F_z(Psi) = -F_z on F = 0."""
    alpha, beta, gamma, delta, epsilon, zeta = (JElem.coerce(value) for value in params.as_mpolys())
    affine = quartic_form(QuarticParams(alpha, beta, gamma, delta, epsilon, zeta), (JX, JY, JZ, JElem(1)))
    f_z = JElem.coerce(quartic_poly(params).F.diff("Z").evaluate({"W": 1}))
    L = gamma * JX * 2 - delta
    M = epsilon * JX * 2 - zeta
    moved = f_z.compose({"Y": -JY, "Z": M / (L * JZ)})
    # the Jacobian of (x, y) -> (x, -y) is -1
    return moved + f_z == affine * 2 / JZ


# fiberwise translation by the two-torsion section of the alt fibration


def van_geemen_sarti_translation(a: JElem, b: JElem) -> tuple[JElem, JElem, JElem]:
    """Translation by (0, 0) on y^2 z = x (x^2 + a x z + b z^2): [b x z : -b y z : x^2]."""
    x, y, z = (JElem.var(name) for name in ("x", "y", "z"))
    return b * x * z, -b * y * z, x**2


def verify_van_geemen_sarti(a: JElem | None = None, b: JElem | None = None) -> dict[str, bool]:
    if a is None or b is None:
        alt = model(ALT)
        a, b = alt.a2, alt.a4
    x, y, z = (JElem.var(name) for name in ("x", "y", "z"))
    cubic = y**2 * z - x**3 - a * x**2 * z - b * x * z**2
    image = van_geemen_sarti_translation(a, b)
    mapping = dict(zip(("x", "y", "z"), image))
    factor = b**2 * x**2 * z
    square = tuple(component.compose(mapping) for component in image)
    results = {
        "translation preserves the cubic": cubic.compose(mapping) == factor * cubic,
        "translation is an involution": all(c == factor * v for c, v in zip(square, (x, y, z))),
    }
    logger.debug(f"van Geemen-Sarti translation checked on y^2 z = x (x^2 + ({a}) x z + ({b}) z^2)")
    return _check(results)
