"""Smith normal form, cokernels and unimodular inverses over the integers.

The diagonalization here is what turns an exchange matrix B into the
invariant factors of Z^n / Im B, i.e. into an explicit description of the
Grothendieck group attached to B.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotSquare, NotUnimodular
from .intmatrix import IntMatrix


@dataclass(frozen=True)
class SnfResult:
    """Unimodular factorization U @ A @ V == D.

    D is diagonal with non-negative entries forming a divisibility chain
    (d1 | d2 | ...; trailing zeros allowed).  U and V have determinant +-1.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        return self.d.diagonal_entries()


@dataclass(frozen=True)
class AbelianGroupDescriptor:
    """A finitely generated abelian group Z^free_rank + Z/d1 + Z/d2 + ...

    Torsion entries are the invariant factors > 1, in divisibility order
    (each divides the next).
    """

    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion entries must be >= 2")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion


def _pick_pivot(m: list[list[int]], t: int, rows: int, cols: int) -> tuple[int, int] | None:
    """Nonzero entry of minimal |value| in m[t:, t:]; ties broken by (row, col)."""
    best: tuple[int, int] | None = None
    best_abs = 0
    for i in range(t, rows):
        mi = m[i]
        for j in range(t, cols):
            x = mi[j]
            if x and (best is None or abs(x) < best_abs):
                best = (i, j)
                best_abs = abs(x)
                if best_abs == 1:
                    return best
    return best


def _swap_rows(m: list[list[int]], a: int, b: int) -> None:
    m[a], m[b] = m[b], m[a]


def _swap_cols(m: list[list[int]], a: int, b: int) -> None:
    for row in m:
        row[a], row[b] = row[b], row[a]


def _add_row(m: list[list[int]], dst: int, src: int, factor: int) -> None:
    """row dst += factor * row src"""
    md, ms = m[dst], m[src]
    for j, x in enumerate(ms):
        if x:
            md[j] += factor * x


def _add_col(m: list[list[int]], dst: int, src: int, factor: int) -> None:
    """col dst += factor * col src"""
    for row in m:
        if row[src]:
            row[dst] += factor * row[src]


def snf(a: IntMatrix) -> SnfResult:
    """Smith normal form of an arbitrary rectangular integer matrix.

    Returns (U, D, V) with U @ a @ V == D, |det U| = |det V| = 1, and D
    diagonal, non-negative, each entry dividing the next.  The reduction
    repeatedly selects the nonzero entry of minimal absolute value in the
    remaining submatrix (ties by smallest (row, col)), clears its row and
    column by exact Euclidean steps, then enforces divisibility over the
    rest of the submatrix.  The pivot choice makes the output
    deterministic and keeps intermediate entries small in practice.
    """
    rows, cols = a.rows, a.cols
    d = [list(row) for row in a.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        piv = _pick_pivot(d, t, rows, cols)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            _swap_rows(d, t, pi)
            _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(d, t, pj)
            _swap_cols(v, t, pj)

        while True:
            p = d[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if d[i][t]:
                    q = d[i][t] // p
                    if q:
                        _add_row(d, i, t, -q)
                        _add_row(u, i, t, -q)
                    if d[i][t]:
                        dirty = True  # remainder strictly smaller than |p|
            for j in range(t + 1, cols):
                if d[t][j]:
                    q = d[t][j] // p
                    if q:
                        _add_col(d, j, t, -q)
                        _add_col(v, j, t, -q)
                    if d[t][j]:
                        dirty = True
            if dirty:
                pi, pj = _pick_pivot(d, t, rows, cols)  # some entry shrank; cannot be None
                if pi != t:
                    _swap_rows(d, t, pi)
                    _swap_rows(u, t, pi)
                if pj != t:
                    _swap_cols(d, t, pj)
                    _swap_cols(v, t, pj)
                continue

            # Row and column t are clear; make the pivot divide the rest.
            p = d[t][t]
            violation = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if d[i][j] % p),
                None)
            if violation is None:
                break
            _add_row(d, t, violation[0], 1)
            _add_row(u, t, violation[0], 1)
            # Loop again: clearing row t now leaves a remainder < |p|.

        t += 1

    for i in range(limit):
        if d[i][i] < 0:
            for j in range(cols):
                d[i][j] = -d[i][j]
            for j in range(rows):
                u[i][j] = -u[i][j]

    return SnfResult(
        u=IntMatrix(rows, rows, tuple(tuple(r) for r in u)),
        d=IntMatrix(rows, cols, tuple(tuple(r) for r in d)),
        v=IntMatrix(cols, cols, tuple(tuple(r) for r in v)),
    )


def cokernel(a: IntMatrix) -> AbelianGroupDescriptor:
    """Structure of Z^rows / Im(a) as free rank plus invariant factors.

    The image of a is spanned by its columns; quotienting Z^rows by it
    leaves one free factor per zero invariant and one finite cyclic
    factor per invariant > 1.
    """
    diag = snf(a).diagonal()
    rank = sum(1 for x in diag if x)
    return AbelianGroupDescriptor(
        free_rank=a.rows - rank,
        torsion=tuple(x for x in diag if x > 1),
    )


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
    """Exact integer inverse of a matrix with determinant +-1.

    From U @ a @ V == identity we get a^-1 == V @ U.  Raises NotSquare
    for rectangular input and NotUnimodular whenever |det a| != 1.
    """
    if not a.is_square:
        raise NotSquare(f"cannot invert a {a.shape_str()} matrix")
    res = snf(a)
    if any(x != 1 for x in res.diagonal()):
        raise NotUnimodular(f"matrix has invariant factors {res.diagonal()}, expected all 1")
    return res.v @ res.u
