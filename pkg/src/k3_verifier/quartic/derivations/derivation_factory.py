# First Party
from k3_verifier.constants import ALT, BFD, MAX, STD
from k3_verifier.fibrations.weierstrass import WeierstrassModel
from k3_verifier.quartic.derivations.alt_derivation import AltDerivation
from k3_verifier.quartic.derivations.bfd_derivation import BfdDerivation
from k3_verifier.quartic.derivations.fibration_derivation import FibrationDerivation, PulledBack
from k3_verifier.quartic.derivations.max_derivation import MaxDerivation
from k3_verifier.quartic.derivations.std_derivation import StdDerivation
from k3_verifier.quartic.surface import QuarticParams


class DerivationFactory:
    @staticmethod
    def create_derivation(which: str) -> FibrationDerivation:
        if which == STD:
            return StdDerivation()
        if which == ALT:
            return AltDerivation()
        if which == BFD:
            return BfdDerivation()
        if which == MAX:
            return MaxDerivation()
        raise NotImplementedError(f"Fibration {which} is not supported")


def derive_pullback(which: str, params: QuarticParams | None = None) -> PulledBack:
    return DerivationFactory.create_derivation(which).derive(params)


def derive_fibration(which: str, params: QuarticParams | None = None) -> WeierstrassModel:
    """The Weierstrass model of the named fibration, in the chart v = 1 of its pencil."""
    return derive_pullback(which, params).model()
