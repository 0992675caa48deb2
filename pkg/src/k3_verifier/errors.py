class VerificationError(Exception):
    """Base class for every failed computation or identity in k3_verifier."""


# exact algebra
class NotDivisible(VerificationError):
    pass


class ZeroInput(VerificationError):
    pass


class DegreeTooLow(VerificationError):
    pass


# lattices
class BadRank(VerificationError):
    pass


class Degenerate(VerificationError):
    pass


class TooLarge(VerificationError):
    pass


class NotIsotropic(VerificationError):
    pass


class Inconsistent(VerificationError):
    pass


class NegativeRank(VerificationError):
    pass


class LatticeSpecError(VerificationError):
    pass


# divisors
class UnknownType(VerificationError):
    pass


class UnknownCurve(VerificationError):
    pass


# quartic
class IdentityFailed(VerificationError):
    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}" if detail else check)


class UnknownPencil(VerificationError):
    pass


class PullbackMismatch(VerificationError):
    pass


class DegenerateJ4(VerificationError):
    pass


# fibrations
class ZeroPolynomial(VerificationError):
    pass


class NonMinimal(VerificationError):
    pass


class NoMatch(VerificationError):
    pass


class ResidualNotSquarefree(VerificationError):
    pass


class EulerMismatch(VerificationError):
    pass


class DegenerateSpecialization(VerificationError):
    pass


class BadQuintic(VerificationError):
    pass


class NoRescalingFound(VerificationError):
    pass


class Mismatch(VerificationError):
    pass


class WitnessNotFound(VerificationError):
    pass


# duality
class MatchFailed(VerificationError):
    pass


class UnknownFiber(VerificationError):
    pass


class RowMismatch(VerificationError):
    def __init__(self, fibration: str, label: str, diff: dict[str, tuple[str, str]]):
        self.fibration = fibration
        self.label = label
        self.diff = diff
        rendered = ", ".join(f"{key}: expected {want!r} got {got!r}" for key, (want, got) in diff.items())
        super().__init__(f"{fibration} row '{label}' differs ({rendered})")


class InconsistentSystem(VerificationError):
    pass


# command line
class UsageError(ValueError):
    pass
