import math

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from superbeta.beta import ClassicalParams, binomial_relation_check
from superbeta.errors import NoConvergentRepresentation, PoleAtNonPositiveInteger, PoleInC, UnresolvablePole
from superbeta.specfun import beta_classical, gamma, gen_binomial, hyp2f1, rgamma, sinpi

mpmath.mp.dps = 30


def test_gamma_examples():
    assert_allclose(gamma(1), 1, rtol=1e-15)
    assert_allclose(gamma(0.5), math.sqrt(math.pi), rtol=1e-14)
    assert_allclose(gamma(5), 24, rtol=1e-14)


def test_gamma_poles():
    for z in (0, -1, -7):
        with pytest.raises(PoleAtNonPositiveInteger):
            gamma(z)
    assert rgamma(-3) == 0
    assert_allclose(rgamma(4), 1 / 6, rtol=1e-14)


def test_gamma_array_input():
    z = np.array([1.0, 2.0, 3.5])
    assert_allclose(gamma(z).real, [math.gamma(v) for v in z], rtol=1e-14)


def test_gamma_against_mpmath_grid():
    re, im = np.meshgrid(np.linspace(-19.9, 19.9, 40), np.linspace(-20, 20, 41))
    z = (re + 1j * im).ravel()
    ref = np.array([complex(mpmath.gamma(mpmath.mpc(v.real, v.imag))) for v in z])
    assert_allclose(gamma(z), ref, rtol=1e-12)


@given(st.complex_numbers(max_magnitude=15, allow_nan=False, allow_infinity=False))
def test_gamma_reflection(z):
    if abs(z.imag) < 1e-3 and abs(z.real - round(z.real)) < 1e-3:
        return
    assert_allclose(gamma(z) * gamma(1 - z) * sinpi(z) / math.pi, 1, rtol=1e-11)


@given(st.complex_numbers(max_magnitude=15, allow_nan=False, allow_infinity=False))
def test_gamma_recurrence(z):
    if abs(z.imag) < 1e-3 and abs(z.real - round(z.real)) < 1e-3:
        return
    assert_allclose(gamma(z + 1), z * gamma(z), rtol=1e-12)


def test_sinpi_exact_zeros():
    assert sinpi(3) == 0
    assert sinpi(-2) == 0
    assert_allclose(sinpi(0.5), 1)


def test_beta_examples():
    assert_allclose(beta_classical(1, 1), 1, rtol=1e-15)
    assert_allclose(beta_classical(2, 3), 1 / 12, rtol=1e-14)
    assert_allclose(beta_classical(0.5, 0.5), math.pi, rtol=1e-14)


def test_hyp2f1_examples():
    assert hyp2f1(0.3, 1.2, 2.5, 0) == 1
    b, c, z = 1.7, 2.9, 3.3
    assert_allclose(hyp2f1(-1, b, c, z), 1 - b * z / c, rtol=1e-15)
    expected = 1 + (-2) * 1.5 * (-0.2) / 3.5 + (-2) * (-1) * 1.5 * 2.5 / (3.5 * 4.5 * 2) * 0.04
    assert_allclose(hyp2f1(-2, 1.5, 3.5, -0.2), expected, rtol=1e-15)


@pytest.mark.parametrize(
    "a,b,c,z",
    [
        (0.3, 1.2, 2.5, 0.5),
        (0.7, -1.5, 3.1, -0.6),
        (1.5, 2.25, 4.5, 0.85),
        (0.5 + 0.2j, 1.0, 2.5 - 0.3j, 0.3 + 0.4j),
        (0.7, 1.3, 3.5, -2.0),
        (-1.5, 2.0, 4.0, -5.0),
        (-3, 1.5, 2.5, 0.99),
        (-6, 0.5, 1.5, -7.0),
    ],
)
def test_hyp2f1_against_mpmath(a, b, c, z):
    ref = complex(mpmath.hyp2f1(a, b, c, z))
    assert_allclose(hyp2f1(a, b, c, z), ref, rtol=1e-12)


def test_hyp2f1_errors():
    with pytest.raises(PoleInC):
        hyp2f1(0.5, 1.0, -2, 0.3)
    with pytest.raises(PoleInC):
        hyp2f1(-3, 1.0, -1, 0.3)
    assert_allclose(hyp2f1(-1, 1.0, -2, 0.3), 1 + 0.3 / 2)
    with pytest.raises(NoConvergentRepresentation):
        hyp2f1(0.5, 1.0, 2.0, 0.95)


@given(st.integers(1, 6), st.floats(0.2, 2.0), st.floats(0.1, 2.0))
def test_hyp2f1_gauss_value(n, b, gap):
    a, c = -n, b + gap
    expected = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b))
    assert_allclose(hyp2f1(a, b, c, 1.0), expected, rtol=1e-8)


def test_gen_binomial_examples():
    assert_allclose(gen_binomial(4, 2), 6, rtol=1e-14)
    for x in (0.3, -1.7, 5, 2 + 1j):
        assert_allclose(gen_binomial(x, 0), 1, rtol=1e-14)
    assert gen_binomial(-3, 2) == 6
    assert gen_binomial(2, 3) == 0
    with pytest.raises(UnresolvablePole):
        gen_binomial(-2, 0.5)


def test_gen_binomial_identity_oracle():
    # -α-β-2 = -1.7 and -α-1 = -0.6
    res = binomial_relation_check(ClassicalParams(-0.4, 0.1))
    assert_allclose(res.rhs, gen_binomial(-1.7, -0.6), rtol=0)
    assert_allclose(res.lhs, gen_binomial(-1.7, -0.6), rtol=1e-8)
    ref = mpmath.gamma(-0.7) / (mpmath.gamma(0.4) * mpmath.gamma(-0.1))
    assert_allclose(gen_binomial(-1.7, -0.6), complex(ref), rtol=1e-12)
