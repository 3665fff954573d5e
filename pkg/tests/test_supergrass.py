import numpy as np
import pytest
from hypothesis import given
from numpy.testing import assert_allclose

from superbeta.errors import DimensionMismatch, SingularMinor, ZeroBody
from superbeta.grassmann import GrassmannAlgebra
from superbeta.sampling import random_supermatrix
from superbeta.supergrass import (
    BETA_CHART,
    Chart,
    affine_forms_2131_32,
    affine_forms_general,
    chart_count,
    chart_labels,
    charts,
    g2244_demo,
    general_chart,
    point_2131_32,
    point_general,
    reduce,
    transition,
    valid_charts,
)
from superbeta.supermatrix import SuperMatrix
from superbeta.verify import EXPECTED_G2244_B, EXPECTED_G2244_B_PRIME

from strategies import seeds

A3 = GrassmannAlgebra(3)


def _numeric_point(x11, x21, xi12, xi22):
    # numbers in the odd columns: the even-parameter reading of ξ
    return point_2131_32(x11, x21, 0.0, xi12, xi22, enforce_parity=False)


def test_chart_count_examples():
    assert chart_count(2, 1, 3, 2) == 6
    assert chart_count(2, 2, 4, 4) == 36
    assert chart_count(0, 0, 3, 2) == 1
    assert len(charts(2, 2, 4, 4)) == 36
    with pytest.raises(DimensionMismatch):
        chart_count(3, 0, 2, 0)


def test_charts_are_lexicographic():
    listing = charts(2, 1, 3, 2)
    assert listing == sorted(listing)
    assert listing[0] == Chart((0, 1), (0,))
    assert BETA_CHART in listing


def test_chart_rejects_unsorted_columns():
    with pytest.raises(ValueError):
        Chart((2, 1), ())


def test_reduce_classical_2x3():
    alg = GrassmannAlgebra(0)
    a = np.array([[2.0, 1.0, 3.0], [0.5, -1.0, 4.0]])
    p = reduce(SuperMatrix([0, 0], [0, 0, 0], a, alg), Chart((0, 1), ()))
    det = np.linalg.det(a[:, :2])
    y1 = np.linalg.det(a[:, [2, 1]]) / det
    y2 = np.linalg.det(a[:, [0, 2]]) / det
    assert_allclose(p.matrix.body(), [[1, 0, y1], [0, 1, y2]], atol=1e-15)


def test_reduce_of_reduced_is_unchanged():
    p = _numeric_point(0.7, -1.3, 0.4, 0.2)
    q = reduce(p, BETA_CHART)
    assert q.matrix.allclose(p.matrix, atol=0.0)


def test_reduce_singular_minor():
    p = _numeric_point(0.7, -1.3, 0.4, 0.2)
    # columns 0 and 1 carry x11, x21 and (1, 0): singular when x21 = 0
    q = _numeric_point(0.7, 0.0, 0.4, 0.2)
    assert Chart((0, 1), (0,)) in valid_charts(p)
    with pytest.raises(SingularMinor):
        reduce(q, Chart((0, 1), (0,)))


def test_transition_same_chart_is_identity(rng):
    A = random_supermatrix(rng, [0, 0, 1], [0, 0, 0, 1, 1], A3)
    p = reduce(A, BETA_CHART)
    assert transition(BETA_CHART, BETA_CHART, p).matrix.allclose(p.matrix, atol=0.0)
    with pytest.raises(ValueError):
        transition(Chart((0, 1), (0,)), BETA_CHART, p)


def test_g2244_shapes():
    demo = g2244_demo()
    assert demo["minor_columns"] == ([3, 4, 5, 6], [2, 4, 5, 6])
    assert demo["labels"] == (EXPECTED_G2244_B, EXPECTED_G2244_B_PRIME)
    assert demo["transition_error"] <= 1e-10
    B = demo["B"]
    direct = reduce(demo["A"], demo["charts"][1])
    assert transition(demo["charts"][0], demo["charts"][1], B).matrix.allclose(direct.matrix, atol=1e-10)


def test_chart_labels_beta_chart():
    assert chart_labels(BETA_CHART, 2, 1, 3, 2) == [
        ["t11", "1", "0", "0", "θ12"],
        ["t21", "0", "1", "0", "θ22"],
        ["υ11", "0", "0", "1", "u12"],
    ]


def test_affine_forms_read_off_example():
    fam = affine_forms_2131_32(_numeric_point(1.0, -1.0, 1.0, 0.0))
    theta = fam.algebra.generator(fam.theta[0])
    for t in (0.0, 0.3, 0.8):
        (l1,), (l2,) = fam.evaluate(t)
        assert l1.allclose(fam.algebra.scalar(1 - t), atol=1e-15)
        assert l2.allclose(1 + theta, atol=1e-15)


def test_affine_forms_zero_point():
    fam = affine_forms_2131_32(point_2131_32(1.0, 0.0, 0.0, 0.0, 0.0))
    theta = fam.algebra.generator(fam.theta[0])
    (l1,), (l2,) = fam.evaluate(0.6)
    assert l1 == fam.algebra.one()
    assert l2 == theta
    with pytest.raises(ZeroBody):
        affine_forms_2131_32(point_2131_32(0.0, 0.0, 0.0, 0.0, 0.0))


def test_affine_forms_general_classical():
    x11, x21 = 2.0, -0.5
    p = point_general([x11, x21], [], [[], []], [], GrassmannAlgebra(0))
    fam = affine_forms_general(p)
    ls, odd = fam.evaluate(0.7)
    assert odd == []
    assert_allclose([lv.body for lv in ls], [x11 + x21 * 0.7, 1.0, 0.7])


def test_affine_forms_general_zero_coordinates():
    alg = GrassmannAlgebra(0)
    p = point_general([0.0, 0.0], [0.0], [[0.0], [0.0]], [[0.0]], alg, enforce_parity=False)
    fam = affine_forms_general(p)
    ls, odd = fam.evaluate(0.4)
    assert ls[0].is_zero()
    assert odd[1].is_zero()
    assert odd[0] == fam.algebra.generator(fam.theta[0])


def test_general_specializes_to_beta_forms():
    alg = GrassmannAlgebra(1)
    eta = 0.8 * alg.generator(0)
    x11, x21, xi12, xi22 = 2.0, -0.7, 0.9, 0.3
    p = point_2131_32(x11, x21, eta, xi12, xi22, 1.0, alg, enforce_parity=False)
    gen = affine_forms_general(p)
    beta = affine_forms_2131_32(p)
    t = 0.35
    assert (gen.even_forms[0](t) / x11).allclose(beta.even_forms[0](t), atol=1e-15)
    assert gen.odd_forms[1](t).allclose(beta.odd_forms[0](t), atol=1e-15)


@given(seeds())
def test_affine_forms_match_row_action(rng):
    alg = GrassmannAlgebra(2)
    while True:
        A = random_supermatrix(rng, [0, 0, 1], [0, 0, 0, 1, 1], alg)
        try:
            p = reduce(A, BETA_CHART)
            break
        except SingularMinor:
            continue
    fam = affine_forms_general(p)
    big = fam.algebra
    theta = big.generator(fam.theta[0])
    t = float(rng.uniform(0, 2))
    ls, lams = fam.evaluate(t)
    for j, form in enumerate(ls + lams):
        col = [p.matrix[i, j].embed(big.dim) for i in range(3)]
        expected = col[0] + t * col[1] + theta * col[2]
        assert form.allclose(expected, atol=1e-12)


def _generic_point(rng):
    while True:
        A = random_supermatrix(rng, [0, 0, 1], [0, 0, 0, 1, 1], A3)
        if len(valid_charts(A)) == chart_count(2, 1, 3, 2):
            return A


@given(seeds())
def test_reduce_idempotent_and_gauge_invariant(rng):
    A = _generic_point(rng)
    c = charts(2, 1, 3, 2)[rng.integers(6)]
    p = reduce(A, c)
    assert reduce(p, c).matrix.allclose(p.matrix, atol=1e-10)
    U = random_supermatrix(rng, [0, 0, 1], algebra=A3)
    assert reduce(U @ A, c).matrix.allclose(p.matrix, atol=1e-10)


@given(seeds())
def test_transition_round_trip_and_cocycle(rng):
    A = _generic_point(rng)
    listing = charts(2, 1, 3, 2)
    i, j, k = rng.choice(6, size=3, replace=False)
    c1, c2, c3 = listing[i], listing[j], listing[k]
    p1 = reduce(A, c1)
    p2 = transition(c1, c2, p1)
    assert transition(c2, c1, p2).matrix.allclose(p1.matrix, atol=1e-10)
    assert transition(c2, c3, p2).matrix.allclose(transition(c1, c3, p1).matrix, atol=1e-10)


def test_general_chart():
    assert general_chart(1) == BETA_CHART
    assert general_chart(0) == Chart((1, 2), ())
