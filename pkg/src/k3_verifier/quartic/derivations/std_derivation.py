# First Party
from k3_verifier.constants import STD
from k3_verifier.exactalg.jelem import JElem
from k3_verifier.exactalg.mpoly import MPoly
from k3_verifier.quartic.derivations.fibration_derivation import (
    T,
    U,
    V,
    FibrationDerivation,
    Substitution,
    x,
    y,
    z,
)
from k3_verifier.quartic.surface import QuarticParams, params_from_J


class StdDerivation(FibrationDerivation):
    """Planes through L2: X = uvx, Y = y, Z = 4u^4v^2 z, W = 4u^3v^3 z."""

    kind = STD
    pencil = "L2"

    @property
    def chart(self) -> tuple[JElem, JElem]:
        return JElem(1), T / params_from_J().zeta

    @property
    def scale(self) -> JElem:
        return 2 / params_from_J().zeta ** 2

    def substitution(self, params: QuarticParams) -> Substitution:
        return Substitution(
            X=U * V * x,
            Y=y,
            W=4 * U**3 * V**3 * z,
            numerator=4 * U**4 * V**2 * z,
            denominator=MPoly.one(),
        )

    def printed(self, params: QuarticParams) -> tuple[MPoly, MPoly, MPoly]:
        alpha, beta, gamma, delta, epsilon, zeta = params.as_mpolys()
        f = -4 * U**3 * V**3 * (gamma * U**2 + 3 * alpha * U * V + epsilon * V**2)
        g = 8 * U**5 * V**5 * (delta * U**2 - 2 * beta * U * V + zeta * V**2)
        return MPoly.zero(), f, g
