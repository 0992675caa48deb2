# Standard Library
import logging
from collections.abc import Sequence
from dataclasses import dataclass

# Third Party
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "IntMatrix":
        frozen = tuple(tuple(int(entry) for entry in row) for row in rows)
        width = len(frozen[0]) if frozen else (ncols or 0)
        if any(len(row) != width for row in frozen):
            raise ValueError("rows of an integer matrix must have equal length")
        return cls(frozen, width)

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], size)

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        size = len(entries)
        return cls.from_rows([[entries[i] if i == j else 0 for j in range(size)] for i in range(size)], size)

    @classmethod
    def block_diagonal(cls, blocks: Sequence["IntMatrix"]) -> "IntMatrix":
        size = sum(block.nrows for block in blocks)
        rows = [[0] * size for _ in range(size)]
        offset = 0
        for block in blocks:
            for i, row in enumerate(block.rows):
                for j, entry in enumerate(row):
                    rows[offset + i][offset + j] = entry
            offset += block.nrows
        return cls.from_rows(rows, size)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, index: tuple[int, int]) -> int:
        row, col = index
        return self.rows[row][col]

    def column(self, index: int) -> tuple[int, ...]:
        return tuple(row[index] for row in self.rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.column(j) for j in range(self.ncols)], self.nrows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        columns = [other.column(j) for j in range(other.ncols)]
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(row, col)) for col in columns] for row in self.rows], other.ncols
        )

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(self[i, j] == self[j, i] for i in range(self.nrows) for j in range(i))

    def is_diagonal(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.nrows) for j in range(self.ncols) if i != j)

    def to_domain_matrix(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(entry) for entry in row] for row in self.rows], self.shape, ZZ)

    @classmethod
    def from_domain_matrix(cls, matrix: DomainMatrix) -> "IntMatrix":
        rows, cols = matrix.shape
        return cls.from_rows([[int(entry) for entry in row] for row in matrix.to_list()], cols)

    def det(self) -> int:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return 1
        return int(self.to_domain_matrix().det())

    def rank(self) -> int:
        if not self.nrows or not self.ncols:
            return 0
        return self.to_domain_matrix().convert_to(QQ).rank()

    def diagonal_entries(self) -> list[int]:
        return [self[i, i] for i in range(min(self.shape))]


def _swap(rows: list[list[int]], i: int, j: int) -> None:
    rows[i], rows[j] = rows[j], rows[i]


def _swap_columns(rows: list[list[int]], i: int, j: int) -> None:
    for row in rows:
        row[i], row[j] = row[j], row[i]


def _repair_chain(u: list[list[int]], s: list[list[int]], v: list[list[int]]) -> None:
    """Enforce d_i | d_(i+1) with zeros last, updating U and V alongside."""
    length = min(len(s), len(s[0]))
    changed = True
    while changed:
        changed = False
        for i in range(length - 1):
            first, second = s[i][i], s[i + 1][i + 1]
            if first == 0 and second != 0:
                _swap(s, i, i + 1)
                _swap(u, i, i + 1)
                _swap_columns(s, i, i + 1)
                _swap_columns(v, i, i + 1)
                changed = True
            elif first != 0 and second % first != 0:
                x, y, g = (int(value) for value in ZZ.gcdex(ZZ(first), ZZ(second)))
                # diag(a, b) -> diag(g, a*b/g) via two row and two column operations
                u[i], u[i + 1] = (
                    [ui - (first // g) * (uj + x * ui) for ui, uj in zip(u[i], u[i + 1])],
                    [uj + x * ui for ui, uj in zip(u[i], u[i + 1])],
                )
                u[i], u[i + 1] = u[i + 1], [-entry for entry in u[i]]
                for row in v:
                    left = row[i] + y * row[i + 1]
                    row[i], row[i + 1] = left, row[i + 1] - (second // g) * left
                s[i][i], s[i + 1][i + 1] = g, first * second // g
                changed = True


def smith_normal_form(matrix: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, S, V) with U*M*V = S diagonal, nonnegative, d_i | d_(i+1), U and V unimodular."""
    rows, cols = matrix.shape
    if rows == 0 or cols == 0:
        return IntMatrix.identity(rows), matrix, IntMatrix.identity(cols)
    smith, left, right = smith_normal_decomp(matrix.to_domain_matrix())
    u = [list(row) for row in IntMatrix.from_domain_matrix(left).rows]
    s = [list(row) for row in IntMatrix.from_domain_matrix(smith).rows]
    v = [list(row) for row in IntMatrix.from_domain_matrix(right).rows]
    _repair_chain(u, s, v)
    for i in range(min(rows, cols)):
        if s[i][i] < 0:
            s[i][i] = -s[i][i]
            u[i] = [-entry for entry in u[i]]
    left_matrix = IntMatrix.from_rows(u, rows)
    diagonal = IntMatrix.from_rows(s, cols)
    right_matrix = IntMatrix.from_rows(v, cols)
    if left_matrix @ matrix @ right_matrix != diagonal:
        raise ArithmeticError("Smith decomposition failed its own check")
    logger.debug(f"smith normal form of a {rows}x{cols} matrix: {diagonal.diagonal_entries()}")
    return left_matrix, diagonal, right_matrix


def invariant_factors(matrix: IntMatrix) -> list[int]:
    _, diagonal, _ = smith_normal_form(matrix)
    return diagonal.diagonal_entries()
