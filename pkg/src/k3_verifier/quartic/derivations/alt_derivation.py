# First Party
from k3_verifier.constants import ALT
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
from k3_verifier.quartic.surface import QuarticParams


class AltDerivation(FibrationDerivation):
    """Planes through L1: X = 2uvx, Y = y, Z = 4v^5(zeta v - 2 epsilon u) z, W = 2v^2 x."""

    kind = ALT
    pencil = "L1"

    @property
    def chart(self) -> tuple[JElem, JElem]:
        return T / 2, JElem(1)

    @property
    def scale(self) -> JElem:
        return JElem(2)

    def substitution(self, params: QuarticParams) -> Substitution:
        _, _, _, _, epsilon, zeta = params.as_mpolys()
        return Substitution(
            X=2 * U * V * x,
            Y=y,
            W=2 * V**2 * x,
            numerator=4 * V**5 * (zeta * V - 2 * epsilon * U) * z,
            denominator=MPoly.one(),
        )

    def printed(self, params: QuarticParams) -> tuple[MPoly, MPoly, MPoly]:
        alpha, beta, gamma, delta, epsilon, zeta = params.as_mpolys()
        a = 4 * V * (4 * U**3 - 3 * alpha * U * V**2 - beta * V**3)
        b = 4 * V**6 * (2 * gamma * U - delta * V) * (2 * epsilon * U - zeta * V)
        return a, b, MPoly.zero()
