"""Dense matrices of arbitrary-precision integers.

``IntMatrix`` is the universal carrier for every matrix in the package
(exchange matrices, transformation matrices, SNF factors).  All arithmetic
is exact: entries are plain Python ints, so there is no overflow and no
floating point anywhere.  Values are immutable; every operation returns a
new matrix.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSquare


@dataclass(frozen=True)
class IntMatrix:
    """An immutable rows x cols matrix of Python ints, row-major.

    Use :meth:`from_rows`, :meth:`zero` or :meth:`identity` to build one;
    the raw constructor expects already-normalized tuples.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.entries)}")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows in matrix data")

    @classmethod
    def from_rows(cls, data: Iterable[Sequence[int]]) -> "IntMatrix":
        """Build a matrix from an iterable of rows of ints.

        Entries are validated with ``operator.index`` so floats are
        rejected rather than truncated.  A 0xN shape cannot be inferred
        from an empty iterable; use :meth:`zero` for that.
        """
        norm = tuple(tuple(operator.index(x) for x in row) for row in data)
        rows = len(norm)
        cols = len(norm[0]) if rows else 0
        return cls(rows, cols, norm)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, rows: int, cols: int, diag: Sequence[int]) -> "IntMatrix":
        if len(diag) > min(rows, cols):
            raise ValueError("too many diagonal entries")
        return cls(rows, cols, tuple(
            tuple(diag[i] if i == j and i < len(diag) else 0 for j in range(cols))
            for i in range(rows)))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        return self.entries[i][j]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(-x for x in row) for row in self.entries))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(f"cannot add {self.shape_str()} and {other.shape_str()}")
        return IntMatrix(self.rows, self.cols, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape_str()} by {other.shape_str()}")
        bt = other.transpose().entries
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt) for row in self.entries))

    def scale(self, c: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(tuple(c * x for x in row) for row in self.entries))

    def mul_vector(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} against {self.shape_str()} matrix")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self.entries)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination.

        Every interior division in the Bareiss recurrence is exact, so
        the whole computation stays in the integers.
        """
        if not self.is_square:
            raise NotSquare(f"determinant of a {self.shape_str()} matrix")
        n = self.rows
        if n == 0:
            return 1
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_skew_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(self.entries[i][j] == -self.entries[j][i]
                   for i in range(self.rows) for j in range(i, self.cols))

    def shape_str(self) -> str:
        return f"{self.rows}x{self.cols}"

    def __str__(self) -> str:
        if self.rows == 0 or self.cols == 0:
            return f"<empty {self.shape_str()} matrix>"
        widths = [max(len(str(self.entries[i][j])) for i in range(self.rows)) for j in range(self.cols)]
        return "\n".join(
            "[ " + "  ".join(str(x).rjust(w) for x, w in zip(row, widths)) + " ]"
            for row in self.entries)
