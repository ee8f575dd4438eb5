"""Exchange matrices, quivers, and the Fomin-Zelevinsky mutation rule.

An exchange matrix is a skew-symmetric integer matrix B = (b_ij) with one
row per labeled vertex.  It encodes a finite quiver without loops or
oriented 2-cycles via b_uv = a_uv - a_vu, where a_uv counts arrows u -> v.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotSkewSymmetric,
)
from .intmatrix import IntMatrix


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class ExchangeMatrix:
    """A skew-symmetric IntMatrix with distinct vertex labels.

    Row and column order is the label order; mutation never permutes it.
    """

    b: IntMatrix
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.b.is_square:
            raise NotSkewSymmetric(f"exchange matrix must be square, got {self.b.shape_str()}")
        if len(self.labels) != self.b.rows:
            raise DimensionMismatch(
                f"{len(self.labels)} labels for a {self.b.shape_str()} matrix")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("vertex labels must be distinct")
        if not self.b.is_skew_symmetric():
            raise NotSkewSymmetric("matrix is not skew-symmetric")

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]],
                  labels: Sequence[str] | None = None) -> "ExchangeMatrix":
        m = IntMatrix.from_rows(data) if data else IntMatrix.zero(0, 0)
        return cls(m, tuple(labels) if labels is not None else _default_labels(m.rows))

    @property
    def n(self) -> int:
        return self.b.rows

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.b[key]

    def _check_index(self, k: int) -> None:
        if not 0 <= k < self.n:
            raise IndexOutOfRange(f"vertex index {k} outside [0, {self.n})")


@dataclass(frozen=True)
class Quiver:
    """Finite multidigraph without loops or oriented 2-cycles.

    Arrows are (source, target, multiplicity >= 1) with at most one record
    per ordered vertex pair.
    """

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, int], ...]

    def __post_init__(self) -> None:
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("quiver vertices must be distinct")
        known = set(self.vertices)
        seen: set[tuple[str, str]] = set()
        for src, tgt, mult in self.arrows:
            if src not in known or tgt not in known:
                raise ValueError(f"arrow {src}->{tgt} references unknown vertex")
            if src == tgt:
                raise ValueError(f"loop at vertex {src}")
            if mult < 1:
                raise ValueError(f"arrow {src}->{tgt} has multiplicity {mult}")
            if (src, tgt) in seen:
                raise ValueError(f"duplicate arrow record {src}->{tgt}")
            if (tgt, src) in seen:
                raise ValueError(f"oriented 2-cycle between {src} and {tgt}")
            seen.add((src, tgt))

    def arrow_count(self, src: str, tgt: str) -> int:
        for s, t, mult in self.arrows:
            if (s, t) == (src, tgt):
                return mult
        return 0


def fz_mutate(b: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Mutate b at vertex k.

    Entries in row or column k flip sign; every other entry becomes
    b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.  The two summands always share
    parity, so the division is exact (asserted).  Mutation is an
    involution and preserves skew-symmetry.
    """
    b._check_index(k)
    e = b.b.entries
    n = b.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-e[i][j])
            else:
                num = abs(e[i][k]) * e[k][j] + e[i][k] * abs(e[k][j])
                assert num % 2 == 0
                row.append(e[i][j] + num // 2)
        out.append(tuple(row))
    return ExchangeMatrix(IntMatrix(n, n, tuple(out)), b.labels)


def s_matrix(b: ExchangeMatrix, k: int) -> IntMatrix:
    """The involution S with s_ij = -delta_ij + (|b_ij| - b_ij)/2 on row k.

    Off row k, S agrees with the identity.  S squares to the identity and
    satisfies S^t @ B @ S == fz_mutate(B, k).
    """
    b._check_index(k)
    e = b.b.entries
    n = b.n
    return IntMatrix(n, n, tuple(
        tuple(
            (-(1 if i == j else 0) + (abs(e[i][j]) - e[i][j]) // 2) if i == k
            else (1 if i == j else 0)
            for j in range(n))
        for i in range(n)))


def mutate_via_s(b: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Mutation computed as S^t @ B @ S; agrees with fz_mutate entrywise."""
    s = s_matrix(b, k)
    return ExchangeMatrix(s.transpose() @ b.b @ s, b.labels)


def quiver_to_matrix(q: Quiver) -> ExchangeMatrix:
    """Exchange matrix with b_uv = a_uv - a_vu in the quiver's vertex order."""
    n = len(q.vertices)
    index = {name: i for i, name in enumerate(q.vertices)}
    grid = [[0] * n for _ in range(n)]
    for src, tgt, mult in q.arrows:
        i, j = index[src], index[tgt]
        grid[i][j] += mult
        grid[j][i] -= mult
    return ExchangeMatrix(IntMatrix(n, n, tuple(tuple(r) for r in grid)), q.vertices)


def matrix_to_quiver(b: ExchangeMatrix) -> Quiver:
    """Canonical loop-free, 2-cycle-free quiver: one arrow record u -> v of
    multiplicity b_uv for each positive entry."""
    arrows = []
    for i in range(b.n):
        for j in range(b.n):
            if b[i, j] > 0:
                arrows.append((b.labels[i], b.labels[j], b[i, j]))
    return Quiver(b.labels, tuple(arrows))


def antisymmetric_pairing(b: ExchangeMatrix, x: Sequence[int], y: Sequence[int]) -> int:
    """The bilinear form x^t @ B @ y; on basis vectors e_u, e_v it is b_uv.

    Skew-symmetry of B makes the form antisymmetric:
    pairing(b, x, y) == -pairing(b, y, x).
    """
    if len(x) != b.n or len(y) != b.n:
        raise DimensionMismatch(
            f"vectors of length {len(x)}, {len(y)} against a rank-{b.n} matrix")
    by = b.b.mul_vector(y)
    return sum(xi * wi for xi, wi in zip(x, by))
