# First Party
from k3_verifier.constants import BFD
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


class BfdDerivation(FibrationDerivation):
    """X = 3uv(x + 6 gamma eps u v^3 z), W = 108 u^3 v^3 z, Z = 6v^2(eps x + 6 gamma eps^2 u v^3 z - 18 zeta u^2 v^2 z).

    With ``printed_sign=True`` the middle term of Z enters with a minus sign; the pullback then has no
    Weierstrass factor.
    """

    kind = BFD
    pencil = "C2"

    def __init__(self, printed_sign: bool = False):
        self.printed_sign = printed_sign

    @property
    def chart(self) -> tuple[JElem, JElem]:
        return -T, JElem(1)

    @property
    def scale(self) -> JElem:
        return JElem(18)

    def substitution(self, params: QuarticParams) -> Substitution:
        _, _, gamma, _, epsilon, zeta = params.as_mpolys()
        sign = -1 if self.printed_sign else 1
        middle = sign * 6 * gamma * epsilon**2 * U * V**3 * z
        return Substitution(
            X=3 * U * V * (x + 6 * gamma * epsilon * U * V**3 * z),
            Y=y,
            W=108 * U**3 * V**3 * z,
            numerator=6 * V**2 * (epsilon * x + middle - 18 * zeta * U**2 * V**2 * z),
            denominator=MPoly.one(),
        )

    def printed(self, params: QuarticParams) -> tuple[MPoly, MPoly, MPoly]:
        alpha, beta, gamma, delta, epsilon, zeta = params.as_mpolys()
        j5 = gamma * zeta + delta * epsilon
        big_f = -108 * U**2 * V**4 * (9 * alpha * U**2 - 3 * j5 * U * V + gamma**2 * epsilon**2 * V**2)
        big_g = (
            -216
            * U**3
            * V**5
            * (
                27 * U**4
                + 54 * beta * U**3 * V
                + 27 * (alpha * gamma * epsilon + delta * zeta) * U**2 * V**2
                - 9 * gamma * epsilon * j5 * U * V**3
                + 2 * gamma**3 * epsilon**3 * V**4
            )
        )
        return MPoly.zero(), big_f, big_g
