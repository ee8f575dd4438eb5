import random

import pytest
from conftest import cofactor_det, random_int_matrix, random_unimodular

from mutwb import (
    AbelianGroupDescriptor,
    IntMatrix,
    NotSquare,
    NotUnimodular,
    cokernel,
    snf,
    unimodular_inverse,
)


def check_contract(a: IntMatrix):
    res = snf(a)
    assert (res.u.rows, res.u.cols) == (a.rows, a.rows)
    assert (res.d.rows, res.d.cols) == (a.rows, a.cols)
    assert (res.v.rows, res.v.cols) == (a.cols, a.cols)
    assert (res.u @ a @ res.v) == res.d
    assert abs(res.u.det()) == 1
    assert abs(res.v.det()) == 1
    diag = res.diagonal()
    for i in range(res.d.rows):
        for j in range(res.d.cols):
            if i != j:
                assert res.d[i, j] == 0
    assert all(x >= 0 for x in diag)
    for a_, b_ in zip(diag, diag[1:]):
        if b_:
            assert a_ != 0 and b_ % a_ == 0
        # zeros may only trail nonzeros
        if a_ == 0:
            assert b_ == 0
    return res


def test_zero_matrix_is_already_in_normal_form():
    res = check_contract(IntMatrix.zero(3, 3))
    assert res.d == IntMatrix.zero(3, 3)
    assert res.u == IntMatrix.identity(3)
    assert res.v == IntMatrix.identity(3)


def test_identity_is_fixed():
    res = check_contract(IntMatrix.identity(2))
    assert res.d == IntMatrix.identity(2)


def test_linear_a3_exchange_matrix():
    # Independently derived by row/column reduction: invariant factors 1, 1, 0.
    res = check_contract(IntMatrix.from_rows([[0, 1, 0], [-1, 0, 1], [0, -1, 0]]))
    assert res.diagonal() == (1, 1, 0)


def test_degenerate_shapes():
    check_contract(IntMatrix.zero(0, 0))
    check_contract(IntMatrix.zero(0, 4))
    check_contract(IntMatrix.zero(4, 0))
    assert cokernel(IntMatrix.zero(4, 0)) == AbelianGroupDescriptor(4, ())


def test_determinism():
    a = IntMatrix.from_rows([[6, 4, 2], [4, 8, 6], [2, 6, 10]])
    first = snf(a)
    for _ in range(3):
        again = snf(a)
        assert (again.u, again.d, again.v) == (first.u, first.d, first.v)


def test_contract_on_random_family():
    rng = random.Random(200)
    for _ in range(300):
        check_contract(random_int_matrix(rng, max_dim=8, bound=9))


def test_invariant_factors_match_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import invariant_factors

    rng = random.Random(201)
    for _ in range(200):
        a = random_int_matrix(rng, max_dim=7, bound=9)
        mine = [x for x in snf(a).diagonal() if x]
        ref = [abs(int(x)) for x in invariant_factors(sympy.Matrix([list(r) for r in a.entries])) if x]
        assert mine == ref


def test_cokernel_examples():
    assert cokernel(IntMatrix.zero(3, 3)) == AbelianGroupDescriptor(3, ())
    assert cokernel(IntMatrix.from_rows([[2]])) == AbelianGroupDescriptor(0, (2,))
    assert cokernel(IntMatrix.from_rows([[0, 2], [-2, 0]])) == AbelianGroupDescriptor(0, (2, 2))
    # 4x4 skew matrix whose determinant the cofactor oracle gives as 1:
    rows = [[0, 1, 0, 0], [-1, 0, -1, 1], [0, 1, 0, -1], [0, -1, 1, 0]]
    assert cofactor_det(rows) == 1
    assert cokernel(IntMatrix.from_rows(rows)).is_trivial


def test_cokernel_invariant_under_unimodular_factors():
    rng = random.Random(202)
    for _ in range(60):
        a = random_int_matrix(rng, max_dim=6, bound=6)
        p = random_unimodular(rng, a.rows)
        q = random_unimodular(rng, a.cols)
        assert cokernel(a) == cokernel(p @ a @ q)


def test_group_descriptor_validation():
    with pytest.raises(ValueError):
        AbelianGroupDescriptor(-1, ())
    with pytest.raises(ValueError):
        AbelianGroupDescriptor(0, (1,))
    with pytest.raises(ValueError):
        AbelianGroupDescriptor(0, (4, 6))  # 4 does not divide 6
    assert AbelianGroupDescriptor(0, (2, 6)).torsion == (2, 6)


def test_unimodular_inverse_identity_and_examples():
    assert unimodular_inverse(IntMatrix.identity(3)) == IntMatrix.identity(3)
    t = IntMatrix.from_rows([[1, 1, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, -1, -1]])
    inv = unimodular_inverse(t)
    assert (t @ inv) == IntMatrix.identity(4)
    assert (inv @ t) == IntMatrix.identity(4)


def test_unimodular_inverse_errors():
    with pytest.raises(NotUnimodular):
        unimodular_inverse(IntMatrix.from_rows([[1, 1], [0, 2]]))
    with pytest.raises(NotSquare):
        unimodular_inverse(IntMatrix.zero(2, 3))


def test_unimodular_inverse_random_family():
    rng = random.Random(203)
    for _ in range(80):
        n = rng.randint(1, 7)
        u = random_unimodular(rng, n)
        assert (unimodular_inverse(u) @ u) == IntMatrix.identity(n)
