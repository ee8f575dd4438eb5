"""Triangulations of a convex polygon as a combinatorial mutation model.

Diagonals of a convex m-gon play the role of the indecomposable objects
of a rank m-3 cluster structure: a triangulation is a maximal compatible
collection, flipping a diagonal inside its quadrilateral is a single
exchange, and the two pairs of opposite quadrilateral sides are the middle
terms of the two exchange triangles.  Boundary edges stand for
projective-injective objects and carry class zero, so they are dropped
from all class vectors.

Everything here is independent of the matrix machinery in
:mod:`mutwb.exchange` / :mod:`mutwb.genmut`, which makes this module an
oracle for it: flips must track Fomin-Zelevinsky mutation, composed
T-matrices must transport one exchange matrix to the other, and the
cokernel of B must be constant across the whole flip class.
"""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BoundaryEdge,
    Crossing,
    NotADiagonal,
    PolygonMismatch,
    PolygonTooSmall,
    SearchSpaceExceeded,
    WrongCount,
)
from .exchange import ExchangeMatrix, Quiver, fz_mutate, quiver_to_matrix
from .genmut import TMatrix, single_step_t
from .intmatrix import IntMatrix
from .snf import AbelianGroupDescriptor, cokernel

DEFAULT_BFS_CAP = 10**6
BFS_CAP_ENV = "MUTWB_MAX_BFS"

Diagonal = tuple[int, int]


def bfs_cap() -> int:
    """Flip-graph search cap; override with the MUTWB_MAX_BFS env var."""
    raw = os.environ.get(BFS_CAP_ENV)
    return int(raw) if raw else DEFAULT_BFS_CAP


def _norm_pair(pair: Sequence[int]) -> Diagonal:
    a, b = pair
    a, b = int(a), int(b)
    return (a, b) if a <= b else (b, a)


def _crosses(d1: Diagonal, d2: Diagonal) -> bool:
    """Strict interior crossing; sharing an endpoint never counts."""
    a, b = d1
    c, d = d2
    if {a, b} & {c, d}:
        return False
    return (a < c < b) != (a < d < b)


@dataclass(frozen=True)
class Triangulation:
    """m-gon (vertices 0..m-1 counterclockwise) cut by m-3 non-crossing diagonals."""

    m: int
    diagonals: frozenset[Diagonal]

    def __post_init__(self) -> None:
        if self.m < 4:
            raise PolygonTooSmall(f"need m >= 4, got {self.m}")
        for a, b in self.diagonals:
            if not (0 <= a < self.m and 0 <= b < self.m):
                raise ValueError(f"vertex of ({a}, {b}) outside 0..{self.m - 1}")
            if a == b:
                raise BoundaryEdge(f"({a}, {b}) is degenerate")
            if a > b:
                raise ValueError(f"diagonal ({a}, {b}) is not a sorted pair")
            if b - a == 1 or (a == 0 and b == self.m - 1):
                raise BoundaryEdge(f"({a}, {b}) is a polygon side, not a diagonal")
        diags = sorted(self.diagonals)
        for i, d1 in enumerate(diags):
            for d2 in diags[i + 1:]:
                if _crosses(d1, d2):
                    raise Crossing(f"{d1} crosses {d2}")
        if len(self.diagonals) != self.m - 3:
            raise WrongCount(
                f"{len(self.diagonals)} diagonals for an {self.m}-gon, need {self.m - 3}")

    def canonical_diagonals(self) -> list[Diagonal]:
        """Sorted endpoint pairs; fixes the basis order everywhere."""
        return sorted(self.diagonals)


@dataclass(frozen=True)
class FlipMove:
    removed: Diagonal
    inserted: Diagonal


def validate(m: int, diagonals: Iterable[Sequence[int]]) -> Triangulation:
    """Normalize raw diagonal data and check all triangulation invariants.

    Raises PolygonTooSmall, BoundaryEdge, Crossing or WrongCount with the
    specific violation.
    """
    return Triangulation(m, frozenset(_norm_pair(p) for p in diagonals))


def fan(m: int, apex: int = 0) -> Triangulation:
    """The fan triangulation: all diagonals from one apex vertex."""
    if m < 4:
        raise PolygonTooSmall(f"need m >= 4, got {m}")
    apex %= m
    others = [(apex + k) % m for k in range(2, m - 1)]
    return Triangulation(m, frozenset(_norm_pair((apex, v)) for v in others))


def diagonal_label(d: Diagonal) -> str:
    return f"{d[0]}-{d[1]}"


def _is_edge(tri: Triangulation, a: int, b: int) -> bool:
    a, b = min(a, b), max(a, b)
    if b - a == 1 or (a == 0 and b == tri.m - 1):
        return True
    return (a, b) in tri.diagonals


def faces(tri: Triangulation) -> list[tuple[int, int, int]]:
    """The m-2 triangles of the decomposition, as sorted vertex triples.

    In convex position a vertex triple bounds a face exactly when all
    three connecting chords are edges of the triangulation.
    """
    out = []
    for a in range(tri.m):
        for b in range(a + 1, tri.m):
            if not _is_edge(tri, a, b):
                continue
            for c in range(b + 1, tri.m):
                if _is_edge(tri, b, c) and _is_edge(tri, a, c):
                    out.append((a, b, c))
    return out


def quiver_of(tri: Triangulation) -> Quiver:
    """One vertex per diagonal; arrows follow counterclockwise succession.

    Walking counterclockwise around a face (a, b, c) traverses its sides
    in the cyclic order {a,b}, {b,c}, {a,c}; each consecutive pair of
    diagonal sides contributes one arrow.  A face with all three sides
    diagonal therefore yields an oriented 3-cycle, and no 2-cycles ever
    arise.
    """
    diags = tri.canonical_diagonals()
    names = {d: diagonal_label(d) for d in diags}
    counts: dict[tuple[str, str], int] = {}
    for a, b, c in faces(tri):
        cycle = [_norm_pair((a, b)), _norm_pair((b, c)), _norm_pair((a, c))]
        for idx in range(3):
            d_from, d_to = cycle[idx], cycle[(idx + 1) % 3]
            if d_from in tri.diagonals and d_to in tri.diagonals:
                key = (names[d_from], names[d_to])
                counts[key] = counts.get(key, 0) + 1
    arrows = tuple((u, v, counts[(u, v)]) for u, v in sorted(counts))
    return Quiver(tuple(names[d] for d in diags), arrows)


def exchange_matrix_of(tri: Triangulation) -> ExchangeMatrix:
    """Exchange matrix of the triangulation in canonical diagonal order."""
    return quiver_to_matrix(quiver_of(tri))


def _quadrilateral(tri: Triangulation, d: Diagonal) -> tuple[int, int, int, int]:
    """Vertices (p, q, r, s) of the quadrilateral around d = (p, r), in
    cyclic order: q is the adjacent apex between p and r, s the other one."""
    p, r = d
    adjacent = [f for f in faces(tri) if p in f and r in f]
    assert len(adjacent) == 2, f"diagonal {d} must bound exactly two faces"
    apexes = [next(v for v in f if v not in d) for f in adjacent]
    inner = [v for v in apexes if p < v < r]
    outer = [v for v in apexes if not p < v < r]
    assert len(inner) == 1 and len(outer) == 1
    return (p, inner[0], r, outer[0])


def flip(tri: Triangulation, d: Sequence[int]) -> tuple[Triangulation, FlipMove]:
    """Replace d by the opposite diagonal of its quadrilateral.

    Flipping the inserted diagonal of the result returns the original
    triangulation.
    """
    d = _norm_pair(d)
    if d not in tri.diagonals:
        raise NotADiagonal(f"{d} is not a diagonal of the triangulation")
    p, q, r, s = _quadrilateral(tri, d)
    inserted = _norm_pair((q, s))
    new_tri = Triangulation(tri.m, tri.diagonals - {d} | {inserted})
    return new_tri, FlipMove(removed=d, inserted=inserted)


def exchange_middle_terms(tri: Triangulation, d: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Class vectors of the two exchange-triangle middle terms at d.

    The quadrilateral around d has sides s1 s2 s3 s4 in cyclic order; one
    middle term collects the diagonal sides among {s1, s3}, the other
    among {s2, s4}.  Boundary sides carry class zero and are skipped.
    Vectors are indexed by tri's canonical diagonal order, with d's own
    slot left at zero.
    """
    d = _norm_pair(d)
    if d not in tri.diagonals:
        raise NotADiagonal(f"{d} is not a diagonal of the triangulation")
    p, q, r, s = _quadrilateral(tri, d)
    sides = [_norm_pair(x) for x in ((p, q), (q, r), (r, s), (s, p))]
    index = {diag: i for i, diag in enumerate(tri.canonical_diagonals())}
    vec_b_m = [0] * len(index)
    vec_b_mstar = [0] * len(index)
    for side in (sides[0], sides[2]):
        if side in tri.diagonals:
            vec_b_m[index[side]] += 1
    for side in (sides[1], sides[3]):
        if side in tri.diagonals:
            vec_b_mstar[index[side]] += 1
    return tuple(vec_b_m), tuple(vec_b_mstar)


def exchange_relation(tri: Triangulation, d: Sequence[int]) -> tuple[int, ...]:
    """The class relation [middle term at d*] - [middle term at d].

    Over the canonical diagonal basis this equals plus or minus the d-row
    of the triangulation's exchange matrix, which is exactly why the
    quotient by these relations is computed by the cokernel of B.
    """
    vec_b_m, vec_b_mstar = exchange_middle_terms(tri, d)
    return tuple(x - y for x, y in zip(vec_b_mstar, vec_b_m))


def flip_path(tri1: Triangulation, tri2: Triangulation,
              max_states: int | None = None) -> list[FlipMove]:
    """A shortest flip sequence from tri1 to tri2, found by BFS.

    Deterministic: neighbors are expanded in canonical diagonal order.
    Raises SearchSpaceExceeded if the visited set outgrows max_states
    (default: the MUTWB_MAX_BFS env var or 10^6).
    """
    if tri1.m != tri2.m:
        raise PolygonMismatch(f"polygons of size {tri1.m} and {tri2.m}")
    cap = bfs_cap() if max_states is None else max_states
    start, goal = tri1.diagonals, tri2.diagonals
    if start == goal:
        return []
    parent: dict[frozenset[Diagonal], tuple[frozenset[Diagonal], FlipMove]] = {}
    seen = {start}
    queue = deque([tri1])
    while queue:
        current = queue.popleft()
        for d in current.canonical_diagonals():
            nxt, move = flip(current, d)
            if nxt.diagonals in seen:
                continue
            seen.add(nxt.diagonals)
            parent[nxt.diagonals] = (current.diagonals, move)
            if nxt.diagonals == goal:
                moves = []
                state = goal
                while state != start:
                    state, mv = parent[state]
                    moves.append(mv)
                moves.reverse()
                return moves
            if len(seen) > cap:
                raise SearchSpaceExceeded(f"flip-graph search exceeded {cap} states")
            queue.append(nxt)
    raise SearchSpaceExceeded("flip graph exhausted without reaching the target")


def composed_t(tri1: Triangulation, tri2: Triangulation,
               max_states: int | None = None) -> TMatrix:
    """Product of single-step T-matrices along a flip path tri1 -> tri2.

    Slots track the basis: each flip replaces the removed diagonal's slot
    by the inserted one, and the final slot order is permuted to tri2's
    canonical order.  The result T is unimodular and satisfies
    B(tri2) == T @ B(tri1) @ T^t.
    """
    path = flip_path(tri1, tri2, max_states)
    slots = tri1.canonical_diagonals()
    n = len(slots)
    b = exchange_matrix_of(tri1)
    b = ExchangeMatrix(b.b, tuple(str(i) for i in range(n)))  # slot-indexed
    t_acc = IntMatrix.identity(n)
    for move in path:
        k = slots.index(move.removed)
        step = single_step_t(b, k)
        t_acc = step.t @ t_acc
        b = fz_mutate(b, k)
        slots[k] = move.inserted
    target = tri2.canonical_diagonals()
    perm = IntMatrix(n, n, tuple(
        tuple(1 if slots[j] == target[i] else 0 for j in range(n))
        for i in range(n)))
    return TMatrix(
        perm @ t_acc,
        new_labels=tuple(diagonal_label(d) for d in target),
        old_labels=tuple(diagonal_label(d) for d in tri1.canonical_diagonals()),
    )


def k0_of_type_a(m: int) -> AbelianGroupDescriptor:
    """Grothendieck group of the rank m-3 model: cokernel of any B.

    The fan triangulation is used; unimodular transport along flips makes
    the answer independent of that choice.
    """
    if m < 4:
        raise PolygonTooSmall(f"need m >= 4, got {m}")
    return cokernel(exchange_matrix_of(fan(m)).b)


def all_triangulations(m: int, max_states: int | None = None) -> list[Triangulation]:
    """Every triangulation of the m-gon, in canonical order.

    Enumerated by BFS over the (connected) flip graph; the count is the
    Catalan number C(m-2).  Subject to the same state cap as flip_path.
    """
    cap = bfs_cap() if max_states is None else max_states
    start = fan(m)
    seen = {start.diagonals}
    queue = deque([start])
    out = [start]
    while queue:
        current = queue.popleft()
        for d in current.canonical_diagonals():
            nxt, _ = flip(current, d)
            if nxt.diagonals in seen:
                continue
            seen.add(nxt.diagonals)
            if len(seen) > cap:
                raise SearchSpaceExceeded(f"enumeration exceeded {cap} states")
            out.append(nxt)
            queue.append(nxt)
    return sorted(out, key=lambda t: t.canonical_diagonals())
