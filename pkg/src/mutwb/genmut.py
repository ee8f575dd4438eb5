"""The generalized mutation rule B' = T @ B @ T^t.

T is the base-change matrix between the indecomposable-object bases of two
maximal rigid collections.  Its columns are read off approximation
triangles: for each old object M_j there is a triangle

    inv_shift(M_j) -> sum_i beta_ij M'_i -> sum_i alpha_ij M'_i -> M_j

over the new objects M'_i, and t_ij = alpha_ij - beta_ij.  For a single
exchange (all objects fixed except one slot k), T specializes to an
explicit involution and the rule collapses to Fomin-Zelevinsky mutation
at k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, IndexOutOfRange, NegativeMultiplicity
from .exchange import ExchangeMatrix
from .intmatrix import IntMatrix
from .snf import unimodular_inverse


@dataclass(frozen=True)
class ApproxTriangleData:
    """Multiplicity data of approximation triangles.

    alpha and beta are m x n matrices of non-negative ints: column j holds
    the multiplicities of each new object in the two middle terms of the
    triangle resolving old object j.  Only non-projective indecomposables
    are indexed; projective summands carry class zero and are omitted.
    """

    new_labels: tuple[str, ...]
    old_labels: tuple[str, ...]
    alpha: IntMatrix
    beta: IntMatrix

    def __post_init__(self) -> None:
        shape = (len(self.new_labels), len(self.old_labels))
        for name, mat in (("alpha", self.alpha), ("beta", self.beta)):
            if (mat.rows, mat.cols) != shape:
                raise DimensionMismatch(
                    f"{name} is {mat.shape_str()}, labels demand {shape[0]}x{shape[1]}")
            for row in mat.entries:
                for x in row:
                    if x < 0:
                        raise NegativeMultiplicity(f"{name} contains {x}")


@dataclass(frozen=True)
class TMatrix:
    """Base-change matrix with rows over new labels, columns over old.

    For genuine data with equally many old and new objects the matrix is
    unimodular; that is asserted where inverses are taken, not at
    construction, so partially built or perturbed data can still be
    represented.
    """

    t: IntMatrix
    new_labels: tuple[str, ...]
    old_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if (self.t.rows, self.t.cols) != (len(self.new_labels), len(self.old_labels)):
            raise DimensionMismatch(
                f"t is {self.t.shape_str()}, labels demand "
                f"{len(self.new_labels)}x{len(self.old_labels)}")

    @property
    def is_square(self) -> bool:
        return self.t.is_square

    def is_unimodular(self) -> bool:
        return self.is_square and abs(self.t.det()) == 1

    def inverse(self) -> "TMatrix":
        """The reverse base change, with old and new labels swapped."""
        return TMatrix(unimodular_inverse(self.t), self.old_labels, self.new_labels)


def t_from_triangles(d: ApproxTriangleData) -> TMatrix:
    """t_ij = alpha_ij - beta_ij, entrywise."""
    return TMatrix(d.alpha - d.beta, d.new_labels, d.old_labels)


def generalized_mutate(b: ExchangeMatrix, t: TMatrix) -> ExchangeMatrix:
    """Transport b along t: returns T @ B @ T^t relabeled by t.new_labels.

    The result is skew-symmetric by construction.  t must be square and
    its old labels must match b's labels exactly (same order).
    """
    if not t.is_square:
        raise DimensionMismatch(f"t is {t.t.shape_str()}, need square")
    if t.old_labels != b.labels:
        raise DimensionMismatch(
            f"t's old labels {t.old_labels} do not match matrix labels {b.labels}")
    return ExchangeMatrix(t.t @ b.b @ t.t.transpose(), t.new_labels)


def single_step_t(b: ExchangeMatrix, k: int) -> TMatrix:
    """The T-matrix of a single exchange at slot k.

    Column k is -delta_ik + max(b_ik, 0); every other column is the
    standard basis vector.  T is an involution (T @ T == identity), and
    generalized_mutate(b, T) equals fz_mutate(b, k).  Labels are reused:
    slot k holds the replacement object under the same name.
    """
    b._check_index(k)
    e = b.b.entries
    n = b.n
    t = IntMatrix(n, n, tuple(
        tuple(
            (-(1 if i == j else 0) + (abs(e[i][j]) + e[i][j]) // 2) if j == k
            else (1 if i == j else 0)
            for j in range(n))
        for i in range(n)))
    return TMatrix(t, b.labels, b.labels)


def s_from_t(t: TMatrix) -> IntMatrix:
    """The inverse-transpose S = (T^t)^-1, exact over the integers.

    Raises NotUnimodular when |det t| != 1 (and NotSquare when t is not
    square).  For a single-step T this is just T^t, since T squares to
    the identity.
    """
    return unimodular_inverse(t.t.transpose())


@dataclass(frozen=True)
class ConsistencyReport:
    """Outcome of comparing the T-matrix route with direct mutation."""

    passed: bool
    vertex: int
    first_diff: tuple[int, int, int, int] | None = None  # (i, j, via_t, direct)

    def __str__(self) -> str:
        if self.passed:
            return f"vertex {self.vertex}: T-route and direct mutation agree"
        i, j, via_t, direct = self.first_diff  # type: ignore[misc]
        return (f"vertex {self.vertex}: mismatch at ({i}, {j}): "
                f"T-route {via_t} != direct {direct}")


def fz_consistency_check(b: ExchangeMatrix, k: int) -> ConsistencyReport:
    """Check generalized_mutate(b, single_step_t(b, k)) == fz_mutate(b, k).

    Mismatches are reported, not raised; the report carries the first
    differing entry in row-major order.
    """
    from .exchange import fz_mutate

    via_t = generalized_mutate(b, single_step_t(b, k))
    direct = fz_mutate(b, k)
    for i in range(b.n):
        for j in range(b.n):
            if via_t[i, j] != direct[i, j]:
                return ConsistencyReport(False, k, (i, j, via_t[i, j], direct[i, j]))
    return ConsistencyReport(True, k)
