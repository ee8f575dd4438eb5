import random

import pytest
from conftest import random_skew

from mutwb import (
    ApproxTriangleData,
    DimensionMismatch,
    ExchangeMatrix,
    IndexOutOfRange,
    IntMatrix,
    NegativeMultiplicity,
    NotUnimodular,
    TMatrix,
    fz_consistency_check,
    fz_mutate,
    generalized_mutate,
    s_from_t,
    single_step_t,
    t_from_triangles,
)

A3 = ExchangeMatrix.from_rows([[0, 1, 0], [-1, 0, 1], [0, -1, 0]])
BM2 = ExchangeMatrix.from_rows([[0, 2, 2], [-2, 0, 0], [-2, 0, 0]])


def identity_triangles(n: int) -> ApproxTriangleData:
    labels = tuple(str(i) for i in range(n))
    return ApproxTriangleData(labels, labels, IntMatrix.identity(n), IntMatrix.zero(n, n))


def test_approx_data_validation():
    with pytest.raises(NegativeMultiplicity):
        ApproxTriangleData(("a",), ("b",), IntMatrix.from_rows([[-1]]), IntMatrix.zero(1, 1))
    with pytest.raises(DimensionMismatch):
        ApproxTriangleData(("a",), ("b", "c"), IntMatrix.zero(1, 1), IntMatrix.zero(1, 1))


def test_t_from_identity_triangles():
    t = t_from_triangles(identity_triangles(4))
    assert t.t == IntMatrix.identity(4)


def test_t_from_triangles_is_alpha_minus_beta():
    d = ApproxTriangleData(
        ("n0", "n1"), ("o0", "o1", "o2"),
        alpha=IntMatrix.from_rows([[1, 0, 2], [0, 3, 0]]),
        beta=IntMatrix.from_rows([[0, 1, 0], [2, 0, 1]]))
    t = t_from_triangles(d)
    assert t.t.entries == ((1, -1, 2), (-2, 3, -1))
    assert t.new_labels == ("n0", "n1") and t.old_labels == ("o0", "o1", "o2")
    assert not t.is_square


def test_generalized_mutate_identity_and_labels():
    t = t_from_triangles(identity_triangles(3))
    t = TMatrix(t.t, A3.labels, A3.labels)
    assert generalized_mutate(A3, t).b == A3.b
    with pytest.raises(DimensionMismatch):
        generalized_mutate(A3, TMatrix(IntMatrix.zero(2, 3), ("a", "b"), A3.labels))
    with pytest.raises(DimensionMismatch):
        generalized_mutate(A3, TMatrix(IntMatrix.identity(3), A3.labels, ("x", "y", "z")))


def test_single_step_t_values():
    zero = ExchangeMatrix.from_rows([[0] * 3 for _ in range(3)])
    t = single_step_t(zero, 2)
    assert t.t.entries == ((1, 0, 0), (0, 1, 0), (0, 0, -1))

    t = single_step_t(A3, 1)
    assert t.t.col(1) == (1, -1, 0)
    assert t.t.col(0) == (1, 0, 0) and t.t.col(2) == (0, 0, 1)

    t = single_step_t(BM2, 0)
    assert t.t.col(0) == (-1, 0, 0)
    assert t.t.col(1) == (0, 1, 0) and t.t.col(2) == (0, 0, 1)

    with pytest.raises(IndexOutOfRange):
        single_step_t(A3, 5)


def test_single_step_t_is_involution():
    rng = random.Random(400)
    for _ in range(100):
        b = random_skew(rng)
        for k in range(b.n):
            t = single_step_t(b, k).t
            assert (t @ t) == IntMatrix.identity(b.n)


def test_generalized_mutate_skew_output():
    rng = random.Random(401)
    for _ in range(60):
        b = random_skew(rng)
        for k in range(b.n):
            out = generalized_mutate(b, single_step_t(b, k))
            assert out.b.is_skew_symmetric()


def test_s_from_t_identity_and_single_step():
    assert s_from_t(TMatrix(IntMatrix.identity(3), A3.labels, A3.labels)) == IntMatrix.identity(3)
    rng = random.Random(402)
    for _ in range(60):
        b = random_skew(rng)
        for k in range(b.n):
            t = single_step_t(b, k)
            # T squares to the identity, so the inverse transpose is T^t itself,
            # which is the row-k involution S.
            s = s_from_t(t)
            assert s == t.t.transpose()
            from mutwb import s_matrix
            assert s == s_matrix(b, k)


def test_s_from_t_exact_inverse_transpose():
    t = TMatrix(IntMatrix.from_rows([[1, 1, 0, 0], [0, -1, 0, 0], [0, 0, 0, 1], [0, 0, -1, -1]]),
                ("a", "b", "c", "d"), ("w", "x", "y", "z"))
    s = s_from_t(t)
    assert (t.t.transpose() @ s) == IntMatrix.identity(4)


def test_s_from_t_rejects_non_unimodular():
    with pytest.raises(NotUnimodular):
        s_from_t(TMatrix(IntMatrix.from_rows([[1, 1], [0, 2]]), ("a", "b"), ("c", "d")))


def test_tmatrix_inverse_swaps_labels():
    t = TMatrix(IntMatrix.from_rows([[-3, -2, -8], [2, 1, 4], [0, 0, 1]]),
                ("n0", "n1", "n2"), ("o0", "o1", "o2"))
    inv = t.inverse()
    assert inv.new_labels == ("o0", "o1", "o2") and inv.old_labels == ("n0", "n1", "n2")
    assert (t.t @ inv.t) == IntMatrix.identity(3)
    assert t.is_unimodular()


def test_consistency_check_passes():
    zero = ExchangeMatrix.from_rows([[0] * 4 for _ in range(4)])
    for k in range(4):
        assert fz_consistency_check(zero, k).passed
    for k in range(3):
        report = fz_consistency_check(A3, k)
        assert report.passed, str(report)


def test_consistency_check_reports_diff_location():
    # A deliberately broken T must be reported, not raised.
    from mutwb.genmut import ConsistencyReport

    report = ConsistencyReport(False, 1, (0, 2, 5, 1))
    assert "(0, 2)" in str(report)
    ok = fz_consistency_check(A3, 1)
    assert ok.first_diff is None and "agree" in str(ok)


def test_consistency_check_random_family():
    rng = random.Random(403)
    for _ in range(200):
        b = random_skew(rng)
        for k in range(b.n):
            assert fz_consistency_check(b, k).passed
