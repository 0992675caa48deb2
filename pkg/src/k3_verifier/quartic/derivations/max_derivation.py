# First Party
from k3_verifier.constants import MAX
from k3_verifier.errors import PullbackMismatch
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
from k3_verifier.quartic.pencils import conic_pencil
from k3_verifier.quartic.surface import QuarticParams


class MaxDerivation(FibrationDerivation):
    """X = delta zeta v((2 beta gamma eps v - u) x - 2 gamma delta^5 eps zeta^5 v^5 z), W = 2 delta^2 zeta^2 v^2 x.

    Z is the solution of the conic pencil C3(u, v) = 0, which is linear in Z.
    """

    kind = MAX
    pencil = "C3"

    @property
    def chart(self) -> tuple[JElem, JElem]:
        return -T, JElem(1)

    @property
    def scale(self) -> JElem:
        return JElem(2)

    def substitution(self, params: QuarticParams) -> Substitution:
        _, beta, gamma, delta, epsilon, zeta = params.as_mpolys()
        shift = 2 * gamma * delta**5 * epsilon * zeta**5 * V**5 * z
        values = {
            "X": delta * zeta * V * ((2 * beta * gamma * epsilon * V - U) * x - shift),
            "Y": y,
            "W": 2 * delta**2 * zeta**2 * V**2 * x,
        }
        conic = conic_pencil(params, U, V)
        if conic.degree("Z") != 1:
            raise PullbackMismatch(f"the conic pencil has degree {conic.degree('Z')} in Z, expected 1")
        return Substitution(
            X=values["X"],
            Y=y,
            W=values["W"],
            numerator=-conic.coeff("Z", 0).compose(values),
            denominator=conic.coeff("Z", 1).compose(values),
        )

    def printed(self, params: QuarticParams) -> tuple[MPoly, MPoly, MPoly]:
        alpha, beta, gamma, delta, epsilon, zeta = params.as_mpolys()
        ge = gamma * epsilon
        dz = delta * zeta
        a = (
            -2
            * dz
            * V
            * (
                U**3
                - 6 * beta * ge * U**2 * V
                + 3 * (4 * beta**2 * ge**2 - alpha * dz**2) * U * V**2
                - 2 * beta * (4 * beta**2 * ge**3 - 3 * alpha * gamma * delta**2 * epsilon * zeta**2 - dz**3) * V**3
            )
        )
        b = (
            -4
            * dz**6
            * V**6
            * (
                2 * ge * U**2
                - (8 * beta * ge**2 + gamma * delta * zeta**2 + delta**2 * epsilon * zeta) * U * V
                + (
                    8 * beta**2 * ge**3
                    - 3 * alpha * gamma * delta**2 * epsilon * zeta**2
                    + 2 * beta * gamma**2 * delta * epsilon * zeta**2
                    + 2 * beta * gamma * delta**2 * epsilon**2 * zeta
                    - dz**3
                )
                * V**2
            )
        )
        c = (
            -8
            * gamma
            * delta**11
            * epsilon
            * zeta**11
            * V**11
            * (ge * U - (2 * beta * ge**2 + gamma * delta * zeta**2 + delta**2 * epsilon * zeta) * V)
        )
        return a, b, c
