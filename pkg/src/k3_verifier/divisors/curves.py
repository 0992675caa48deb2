# Standard Library
import logging
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import lru_cache

# First Party
from k3_verifier.errors import UnknownCurve
from k3_verifier.exactalg.intmatrix import IntMatrix

logger = logging.getLogger(__name__)

CURVE_NAMES = (
    *(f"a{i}" for i in range(1, 10)),
    *(f"b{i}" for i in range(1, 6)),
    "L1",
    "L2",
    "L3",
    "R1",
    "R2",
)

# (curve, curve, intersection number); every other pair of distinct curves is disjoint
CURVE_EDGES = (
    *((f"a{i}", f"a{i + 1}", 1) for i in range(1, 9)),
    ("a9", "L1", 1),
    ("L1", "b2", 1),
    ("b2", "b3", 1),
    ("b2", "b1", 1),
    ("b3", "b4", 1),
    ("b4", "b5", 1),
    ("b4", "R1", 1),
    ("a1", "L3", 1),
    ("a1", "R2", 1),
    ("a3", "L2", 1),
    ("L3", "R1", 2),
    ("R2", "b5", 2),
)


@dataclass(frozen=True)
class CurveGraph:
    """Dual graph of the smooth rational curves on the resolved quartic, as an intersection matrix."""

    names: tuple[str, ...]
    matrix: IntMatrix

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownCurve(f"no curve named {name!r}") from None

    def intersection(self, first: str, second: str) -> int:
        return self.matrix[self.index(first), self.index(second)]

    def neighbours(self, name: str) -> dict[str, int]:
        row = self.index(name)
        return {
            other: self.matrix[row, col]
            for col, other in enumerate(self.names)
            if col != row and self.matrix[row, col]
        }

    def rank(self) -> int:
        return self.matrix.rank()

    def restriction(self, names: Iterable[str]) -> IntMatrix:
        indices = [self.index(name) for name in names]
        return IntMatrix.from_rows([[self.matrix[i, j] for j in indices] for i in indices])


@lru_cache(maxsize=1)
def curve_graph() -> CurveGraph:
    position = {name: index for index, name in enumerate(CURVE_NAMES)}
    rows = [[-2 if i == j else 0 for j in range(len(CURVE_NAMES))] for i in range(len(CURVE_NAMES))]
    for first, second, weight in CURVE_EDGES:
        rows[position[first]][position[second]] = weight
        rows[position[second]][position[first]] = weight
    return CurveGraph(CURVE_NAMES, IntMatrix.from_rows(rows))


_TERM = re.compile(r"^\s*(\d*)\s*\*?\s*([A-Za-z]\w*)\s*$")


class DivisorClass:
    """Integer combination of the named curves."""

    def __init__(self, coefficients: Mapping[str, int] | None = None):
        self._coefficients = {name: value for name, value in (coefficients or {}).items() if value}

    @classmethod
    def curve(cls, name: str) -> "DivisorClass":
        curve_graph().index(name)
        return cls({name: 1})

    @classmethod
    def parse(cls, text: str) -> "DivisorClass":
        """Read "L3 + 2a1 + 3a2 - a6"; curve names are checked against the graph."""
        result = cls()
        normalized = text.replace("−", "-").replace(" ", "")
        if not normalized or normalized == "0":
            return result
        for sign, term in re.findall(r"([+-]?)([^+-]+)", normalized):
            match = _TERM.match(term)
            if not match:
                raise UnknownCurve(f"cannot read divisor term {term!r}")
            multiplier = int(match.group(1) or 1) * (-1 if sign == "-" else 1)
            result = result + multiplier * cls.curve(match.group(2))
        return result

    @property
    def coefficients(self) -> dict[str, int]:
        return dict(self._coefficients)

    def coefficient(self, name: str) -> int:
        return self._coefficients.get(name, 0)

    def support(self) -> list[str]:
        return [name for name in CURVE_NAMES if name in self._coefficients]

    def is_zero(self) -> bool:
        return not self._coefficients

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        merged = dict(self._coefficients)
        for name, value in other._coefficients.items():
            merged[name] = merged.get(name, 0) + value
        return DivisorClass(merged)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass({name: -value for name, value in self._coefficients.items()})

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def __rmul__(self, factor: int) -> "DivisorClass":
        return DivisorClass({name: factor * value for name, value in self._coefficients.items()})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DivisorClass) and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self._coefficients.items()))

    def __repr__(self) -> str:
        return f"DivisorClass({self})"

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        text = ""
        for name in self.support():
            value = self._coefficients[name]
            magnitude = "" if abs(value) == 1 else str(abs(value))
            if not text:
                text = f"{'-' if value < 0 else ''}{magnitude}{name}"
            else:
                text += f" {'-' if value < 0 else '+'} {magnitude}{name}"
        return text


def pairing(first: DivisorClass, second: DivisorClass, graph: CurveGraph | None = None) -> int:
    graph = graph or curve_graph()
    total = 0
    for name, value in first.coefficients.items():
        row = graph.index(name)
        for other, other_value in second.coefficients.items():
            total += value * other_value * graph.matrix[row, graph.index(other)]
    return total


def intersection_vector(divisor: DivisorClass, graph: CurveGraph | None = None) -> dict[str, int]:
    """D.C for every named curve C; two classes with equal vectors are numerically equivalent."""
    graph = graph or curve_graph()
    return {name: pairing(divisor, DivisorClass({name: 1}), graph) for name in graph.names}


def polarizing_divisor() -> DivisorClass:
    return DivisorClass.parse(
        "L2 + a1 + 2a2 + 3a3 + 3a4 + 3a5 + 3a6 + 3a7 + 3a8 + 3a9 + 3L1 + 2b1 + 4b2 + 3b3 + 2b4 + b5"
    )
