# Standard Library
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# First Party
from k3_verifier.errors import BadRank, LatticeSpecError
from k3_verifier.exactalg.intmatrix import IntMatrix

logger = logging.getLogger(__name__)

ADE_KINDS = ("A", "D", "E")


@dataclass(frozen=True)
class Lattice:
    """Even integral lattice given by a Gram matrix on a labelled basis.

    ``summands`` records the direct-sum decomposition the lattice was built from, e.g.
    ("H", "E7", "E7"), with ``blocks`` giving the basis span of each summand.
    """

    gram: IntMatrix
    labels: tuple[str, ...]
    summands: tuple[str, ...] = ()
    blocks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if not self.gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")
        if any(entry % 2 for entry in self.gram.diagonal_entries()):
            raise ValueError("Gram matrix must have even diagonal")
        if len(self.labels) != self.gram.nrows:
            raise ValueError("one label per basis vector is required")

    @property
    def rank(self) -> int:
        return self.gram.nrows

    def det(self) -> int:
        return self.gram.det()

    def name(self) -> str:
        return "+".join(self.summands) if self.summands else "L"

    def summand_lattices(self) -> list["Lattice"]:
        parts = []
        for summand, (start, stop) in zip(self.summands, self.blocks):
            rows = [row[start:stop] for row in self.gram.rows[start:stop]]
            parts.append(Lattice(IntMatrix.from_rows(rows), self.labels[start:stop], (summand,), ((0, stop - start),)))
        return parts


def _dynkin_edges(kind: str, n: int) -> list[tuple[int, int]]:
    if kind == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if kind == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # Bourbaki numbering: 1-3-4-5-..., node 2 attached to node 4
    chain = [0] + list(range(2, n))
    return [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [(1, 3)]


def _check_rank(kind: str, n: int) -> None:
    if kind not in ADE_KINDS:
        raise BadRank(f"unknown root system {kind}")
    if kind == "A" and n < 1:
        raise BadRank(f"A{n} needs n >= 1")
    if kind == "D" and n < 4:
        raise BadRank(f"D{n} needs n >= 4")
    if kind == "E" and n not in (6, 7, 8):
        raise BadRank(f"E{n} needs n in 6, 7, 8")


@lru_cache(maxsize=128)
def ade_lattice(kind: str, n: int) -> Lattice:
    """Negative-definite root lattice: the Cartan matrix of type kind_n, negated."""
    _check_rank(kind, n)
    rows = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _dynkin_edges(kind, n):
        rows[i][j] = rows[j][i] = 1
    name = f"{kind}{n}"
    labels = tuple(f"{name}.{i + 1}" for i in range(n))
    return Lattice(IntMatrix.from_rows(rows), labels, (name,), ((0, n),))


def hyperbolic_plane() -> Lattice:
    return Lattice(IntMatrix.from_rows([[0, 1], [1, 0]]), ("H.f", "H.s"), ("H",), ((0, 2),))


@lru_cache(maxsize=8)
def even_unimodular_dn_plus(n: int) -> Lattice:
    """The index-two overlattice D_n^+ (n divisible by 8), negative definite.

    Basis in the even coordinate system: e1+e2, e(i+1)-e(i) for i < n-1, and
    (1, -1, ..., -1, 1)/2. The first n-1 vectors span D_(n-1), the last lifts it with height 1/2.
    """
    if n % 8 or n < 8:
        raise BadRank(f"D{n}+ needs n divisible by 8")
    vectors: list[list[Fraction]] = []
    first = [Fraction(0)] * n
    first[0] = first[1] = Fraction(1)
    vectors.append(first)
    for i in range(n - 2):
        vector = [Fraction(0)] * n
        vector[i + 1], vector[i] = Fraction(1), Fraction(-1)
        vectors.append(vector)
    spinor = [Fraction(-1, 2)] * n
    spinor[0] = spinor[-1] = Fraction(1, 2)
    vectors.append(spinor)
    rows = [[-int(sum(a * b for a, b in zip(left, right))) for right in vectors] for left in vectors]
    name = f"D{n}+"
    return Lattice(IntMatrix.from_rows(rows), tuple(f"{name}.{i + 1}" for i in range(n)), (name,), ((0, n),))


def direct_sum(first: Lattice, second: Lattice) -> Lattice:
    offset = first.rank
    return Lattice(
        IntMatrix.block_diagonal([first.gram, second.gram]),
        first.labels + second.labels,
        first.summands + second.summands,
        first.blocks + tuple((start + offset, stop + offset) for start, stop in second.blocks),
    )


def sum_of(summands: list[Lattice]) -> Lattice:
    if not summands:
        raise LatticeSpecError("empty direct sum")
    result = summands[0]
    for summand in summands[1:]:
        result = direct_sum(result, summand)
    return result


_SUMMAND = re.compile(r"(H|[ADE]\d+(?:\^\+|⁺)?)(?:\((?:-|−)1\))?")
_SEPARATOR = re.compile(r"\s*(?:\+|⊕)\s*")


def summand_lattice(token: str) -> Lattice:
    if token == "H":
        return hyperbolic_plane()
    kind = token[0]
    plus = token.endswith("+") or token.endswith("⁺")
    digits = token[1:].rstrip("+^⁺")
    if plus:
        if kind != "D":
            raise LatticeSpecError(f"only D lattices have a '+' overlattice, got {token}")
        return even_unimodular_dn_plus(int(digits))
    return ade_lattice(kind, int(digits))


def parse_lattice_spec(spec: str) -> Lattice:
    """Parse "H+E8+D6", "D12+A1+A1", "H⊕E7(−1)⊕E7(−1)" or "H+D16^+" into a direct sum."""
    position = 0
    text = spec.strip()
    tokens = []
    while position < len(text):
        match = _SUMMAND.match(text, position)
        if not match:
            raise LatticeSpecError(f"cannot parse lattice spec {spec!r} at position {position}")
        tokens.append(match.group(1))
        position = match.end()
        if position == len(text):
            break
        separator = _SEPARATOR.match(text, position)
        if not separator or separator.end() == len(text):
            raise LatticeSpecError(f"expected a summand separator in {spec!r} at position {position}")
        position = separator.end()
    if not tokens:
        raise LatticeSpecError("empty lattice spec")
    try:
        return sum_of([summand_lattice(token) for token in tokens])
    except BadRank as error:
        raise LatticeSpecError(f"bad summand in {spec!r}: {error}") from error


def format_lattice_label(summands: tuple[str, ...]) -> str:
    """Table notation: H⊕E7(−1)⊕E7(−1), with D16⁺ and no twist on H."""
    parts = []
    for summand in summands:
        if summand == "H":
            parts.append("H")
        elif summand.endswith("+"):
            parts.append(f"{summand[:-1]}⁺(−1)")
        else:
            parts.append(f"{summand}(−1)")
    return "⊕".join(parts)
