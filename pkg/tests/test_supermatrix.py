import itertools

import numpy as np
import pytest
from hypothesis import given
from numpy.testing import assert_allclose

from superbeta.errors import DimensionMismatch, ParityError, SingularBody, SingularOddOddBlock
from superbeta.grassmann import GrassmannAlgebra, invert
from superbeta.sampling import random_element, random_supermatrix
from superbeta.supermatrix import (
    SuperMatrix,
    berezinian,
    block_view,
    det_even,
    identity,
    inverse,
    matmul,
    numeric_rank,
)

from strategies import seeds

A2 = GrassmannAlgebra(2)
A4 = GrassmannAlgebra(4)


def permutation_det(entries, zero):
    """Leibniz sum over all permutations."""
    n = entries.shape[0]
    total = zero
    for perm in itertools.permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        term = zero + (-1) ** inversions
        for i, j in enumerate(perm):
            term = term * entries[i, j]
        total = total + term
    return total


def test_identity_is_neutral(rng):
    M = random_supermatrix(rng, [0, 0, 1], algebra=A4)
    I = identity(M.row_parities, A4)
    assert (M @ I).allclose(M, atol=0.0)
    assert (I @ M).allclose(M, atol=0.0)


def test_row_action_gives_classical_forms():
    alg = GrassmannAlgebra(0)
    y1, y2, t = 2.0, -0.5, 0.3
    reduced = SuperMatrix([0, 0], [0, 0, 0], [[1.0, 0.0, y1], [0.0, 1.0, y2]], alg)
    row = SuperMatrix([0], [0, 0], [[1.0, t]], alg)
    forms = (row @ reduced).body()[0]
    assert_allclose(forms, [1.0, t, y1 + y2 * t])


def test_det_even_examples():
    t0, t1 = A2.generators()
    assert det_even(identity([0, 0, 0], A2)) == A2.one()
    a, b, c, d = 1.5, -2.0, 0.25, 3.0
    assert det_even(SuperMatrix([0, 0], [0, 0], [[a, b], [c, d]], A2)) == A2.scalar(a * d - b * c)
    M = SuperMatrix([0, 0], [0, 0], [[2 + t0 * t1, 0.0], [0.0, 3.0]], A2)
    assert det_even(M) == 6 + 3 * t0 * t1


def test_det_even_rejects_odd_entries():
    t0, _ = A2.generators()
    M = SuperMatrix([0, 1], [0, 1], [[1.0, t0], [t0, 1.0]], A2)
    with pytest.raises(ParityError):
        det_even(M)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_det_even_matches_permutation_sum(rng, n):
    entries = [[random_element(rng, A4, parity=0) for _ in range(n)] for _ in range(n)]
    M = SuperMatrix([0] * n, [0] * n, entries, A4)
    assert det_even(M).allclose(permutation_det(M.entries, A4.zero()), atol=1e-12)


def test_inverse_examples():
    t0, t1 = A2.generators()
    I = identity([0, 1], A2)
    assert inverse(I).allclose(I, atol=0.0)
    M = SuperMatrix([0], [0], [[2 + t0 * t1]], A2)
    assert inverse(M)[0, 0].allclose(0.5 - t0 * t1 / 4, atol=1e-16)


def test_inverse_singular_body():
    t0, t1 = A2.generators()
    M = SuperMatrix([0, 0], [0, 0], [[1.0, 2.0], [2.0, 4.0 + t0 * t1]], A2)
    with pytest.raises(SingularBody):
        inverse(M)


def test_berezinian_examples():
    t0, t1 = A2.generators()
    assert berezinian(identity([0, 0, 1, 1], A2)) == A2.one()
    a, d = 2.0, 5.0
    M = SuperMatrix([0, 1], [0, 1], [[a, t0], [t1, d]], A2)
    assert berezinian(M).allclose(a / d - t0 * t1 / d**2, atol=1e-16)


def test_berezinian_block_diagonal(rng):
    alg = A4
    A = [[random_element(rng, alg, parity=0) for _ in range(2)] for _ in range(2)]
    D = [[random_element(rng, alg, parity=0) for _ in range(2)] for _ in range(2)]
    z = alg.zero()
    M = SuperMatrix([0, 0, 1, 1], [0, 0, 1, 1], [A[0] + [z, z], A[1] + [z, z], [z, z] + D[0], [z, z] + D[1]], alg)
    dA = det_even(SuperMatrix([0, 0], [0, 0], A, alg))
    dD = det_even(SuperMatrix([0, 0], [0, 0], D, alg))
    assert berezinian(M) == dA * invert(dD)


def test_berezinian_singular_odd_block():
    M = SuperMatrix([0, 1], [0, 1], [[1.0, 0.0], [0.0, 0.0]], A2)
    with pytest.raises(SingularOddOddBlock):
        berezinian(M)


def test_berezinian_parity_sorted_blocks(rng):
    M = random_supermatrix(rng, [1, 0, 0], algebra=A4)
    v = block_view(M)
    assert v.row_order == (1, 2, 0)
    assert v.A.shape == (2, 2) and v.D.shape == (1, 1)
    assert v.D[0, 0] == M[0, 0]
    assert v.assemble().allclose(M, atol=0.0)


def test_matmul_errors():
    M = identity([0, 1], A2)
    with pytest.raises(DimensionMismatch):
        matmul(M, identity([0, 1, 1], A2))
    with pytest.raises(ParityError):
        matmul(M, identity([1, 0], A2))


def test_parity_enforced_on_construction():
    with pytest.raises(ParityError):
        SuperMatrix([0], [0], [[A2.generator(0)]], A2)


def test_numeric_rank():
    assert numeric_rank(np.eye(3)) == 3
    assert numeric_rank(np.array([[1.0, 2.0], [2.0, 4.0 + 1e-12]])) == 1
    assert numeric_rank(np.zeros((2, 2))) == 0


@given(seeds())
def test_berezinian_multiplicative(rng):
    layout = [0, 0, 1, 1] if rng.integers(2) else [0, 0, 1]
    M = random_supermatrix(rng, layout, algebra=A4)
    N = random_supermatrix(rng, layout, algebra=A4)
    assert (berezinian(M @ N) - berezinian(M) * berezinian(N)).max_abs() <= 1e-9


@given(seeds())
def test_inverse_two_sided(rng):
    M = random_supermatrix(rng, [0, 1, 0, 1], algebra=A4)
    Minv = inverse(M)
    I = identity(M.row_parities, A4)
    assert (M @ Minv - I).max_abs() <= 1e-10
    assert (Minv @ M - I).max_abs() <= 1e-10
    assert (berezinian(Minv) - invert(berezinian(M))).max_abs() <= 1e-9
