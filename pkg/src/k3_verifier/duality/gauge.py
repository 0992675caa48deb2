# Standard Library
import logging
import re
from dataclasses import dataclass

# First Party
from k3_verifier.errors import UnknownFiber
from k3_verifier.fibrations.classify import FiberConfig
from k3_verifier.fibrations.weierstrass import euler_number

logger = logging.getLogger(__name__)

_IN = re.compile(r"^I(\d+)$")
_IN_STAR = re.compile(r"^I(\d+)\*$")

_SPORADIC = {"II": None, "III": ("su(2)", 1), "IV": ("su(3)", 2), "IV*": ("e6", 6), "III*": ("e7", 7), "II*": ("e8", 8)}

SPIN32_NOTE = "Spin(32)/ℤ2"


@dataclass(frozen=True)
class GaugeLabel:
    summands: tuple[tuple[str, int], ...]
    note: str = ""

    @property
    def rank(self) -> int:
        return sum(rank for _, rank in self.summands)

    def label(self) -> str:
        return " ⊕ ".join(name for name, _ in self.summands) or "0"

    def __str__(self) -> str:
        return f"{self.label()} ({self.note})" if self.note else self.label()


def fiber_algebra(kodaira: str) -> tuple[str, int] | None:
    """Simple summand carried by a fiber type, None for I0, I1 and II."""
    if match := _IN.match(kodaira):
        n = int(match.group(1))
        return (f"su({n})", n - 1) if n >= 2 else None
    if match := _IN_STAR.match(kodaira):
        n = int(match.group(1))
        return f"so({2 * n + 8})", n + 4
    if kodaira in _SPORADIC:
        return _SPORADIC[kodaira]
    raise UnknownFiber(f"no gauge algebra is known for fibers of type {kodaira}")


def gauge_algebra(config: FiberConfig) -> GaugeLabel:
    counts = config.kodaira_counts()
    summands = []
    for kodaira in sorted(counts, key=lambda kodaira: (-euler_number(kodaira), kodaira)):
        algebra = fiber_algebra(kodaira)
        if algebra is not None:
            summands += [algebra] * counts[kodaira]
    note = SPIN32_NOTE if ("so(32)", 16) in summands else ""
    label = GaugeLabel(tuple(summands), note)
    if label.rank != config.root_rank():
        raise UnknownFiber(f"gauge rank {label.rank} differs from the fiber root rank {config.root_rank()}")
    return label


# total rank per row: generic and Res rows, codimension one enhancements, J4 = J5 = 0
EXPECTED_RANKS = {16: 14, 17: 15, 18: 16}


def rank_check(label: GaugeLabel, picard: int) -> bool:
    expected = EXPECTED_RANKS.get(picard)
    if expected is None or label.rank != expected:
        logger.error(f"gauge algebra {label} has rank {label.rank}, expected {expected} at picard rank {picard}")
        return False
    return True
