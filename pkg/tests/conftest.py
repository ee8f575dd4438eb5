"""Shared generators and independent oracles for the test suite.

Oracles here never call the code path they are checking: determinants
come from cofactor expansion or sympy, invariant factors from sympy, and
random unimodular matrices are built as explicit products of elementary
operations.
"""

from __future__ import annotations

import random

from mutwb import ExchangeMatrix, IntMatrix, Triangulation, fan, flip


def cofactor_det(rows: list[list[int]]) -> int:
    """Determinant by first-row cofactor expansion (exponential; keep n small)."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, x in enumerate(rows[0]):
        if x:
            minor = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * x * cofactor_det(minor)
    return total


def random_int_matrix(rng: random.Random, max_dim: int = 8, bound: int = 9) -> IntMatrix:
    r = rng.randint(1, max_dim)
    c = rng.randint(1, max_dim)
    return IntMatrix.from_rows(
        [[rng.randint(-bound, bound) for _ in range(c)] for _ in range(r)])


def random_skew(rng: random.Random, n: int | None = None,
                max_dim: int = 8, bound: int = 5) -> ExchangeMatrix:
    if n is None:
        n = rng.randint(1, max_dim)
    grid = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = rng.randint(-bound, bound)
            grid[i][j] = x
            grid[j][i] = -x
    return ExchangeMatrix.from_rows(grid)


def random_unimodular(rng: random.Random, n: int, steps: int = 12) -> IntMatrix:
    """Product of elementary row operations applied to the identity."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        op = rng.randrange(3)
        i = rng.randrange(n)
        j = rng.randrange(n)
        if op == 0 and i != j:
            c = rng.randint(-3, 3)
            m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        elif op == 1 and i != j:
            m[i], m[j] = m[j], m[i]
        elif op == 2:
            m[i] = [-a for a in m[i]]
    return IntMatrix.from_rows(m)


def random_triangulation(rng: random.Random, m: int, flips: int | None = None) -> Triangulation:
    tri = fan(m)
    for _ in range(3 * m if flips is None else flips):
        d = rng.choice(tri.canonical_diagonals())
        tri, _ = flip(tri, d)
    return tri


def slot_matrix(tri: Triangulation, slots: list[tuple[int, int]]) -> IntMatrix:
    """Exchange matrix of tri re-indexed into the given slot order."""
    from mutwb import exchange_matrix_of

    b = exchange_matrix_of(tri)
    canonical = tri.canonical_diagonals()
    pos = {d: i for i, d in enumerate(canonical)}
    idx = [pos[d] for d in slots]
    n = len(idx)
    return IntMatrix.from_rows(
        [[b.b[idx[i], idx[j]] for j in range(n)] for i in range(n)]) if n else IntMatrix.zero(0, 0)
