"""Gamma, beta, Gauss 2F1 and generalized binomial coefficients over C."""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .errors import (
    NoConvergentRepresentation,
    PoleAtNonPositiveInteger,
    PoleInC,
    UnresolvablePole,
)

__all__ = [
    "HYP2F1_MAX_TERMS",
    "HYP2F1_RTOL",
    "PFAFF_THRESHOLD",
    "gamma",
    "rgamma",
    "sinpi",
    "beta_classical",
    "hyp2f1",
    "gen_binomial",
    "is_nonpositive_integer",
]

HYP2F1_MAX_TERMS = 10_000
HYP2F1_RTOL = 1e-16
PFAFF_THRESHOLD = 0.9


def is_nonpositive_integer(z) -> bool:
    z = complex(z)
    return z.imag == 0 and z.real <= 0 and float(z.real).is_integer()


def _is_integer(z) -> bool:
    z = complex(z)
    return z.imag == 0 and float(z.real).is_integer()


def gamma(z):
    """Complex Gamma function (Lanczos, with reflection for Re z < 1/2).

    Accepts a scalar (returns ``complex``) or an array.
    """
    scalar = np.ndim(z) == 0
    arr = np.atleast_1d(np.asarray(z, dtype=np.complex128))
    poles = (arr.imag == 0) & (arr.real <= 0) & (arr.real == np.round(arr.real))
    if poles.any():
        raise PoleAtNonPositiveInteger(f"Gamma has a pole at {arr[poles][0].real:g}")
    out = _kernels.gamma_lanczos(arr)
    return complex(out[0]) if scalar else out


def rgamma(z) -> complex:
    """``1/Γ(z)``, which is entire: exactly 0 at the poles of Γ."""
    if is_nonpositive_integer(z):
        return 0j
    return 1.0 / gamma(z)


def sinpi(z) -> complex:
    """``sin(πz)`` with exact zeros at the integers."""
    z = complex(z)
    s, c = _kernels._sincospi_np(np.array([z.real]))
    py = math.pi * z.imag
    return complex(s[0] * math.cosh(py), c[0] * math.sinh(py))


def beta_classical(r, s) -> complex:
    """Euler beta ``Γ(r)Γ(s)/Γ(r+s)``."""
    r, s = complex(r), complex(s)
    return gamma(r) * gamma(s) / gamma(r + s)


def _terminating_sum(a, b, c, z, n_terms) -> complex:
    total = term = 1.0 + 0j
    for n in range(n_terms):
        term = term * (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z
        total += term
    return total


def _series(a, b, c, z) -> complex:
    vals, ok = _kernels.hyp2f1_series(
        complex(a), complex(b), complex(c), np.array([z], dtype=np.complex128), HYP2F1_MAX_TERMS, HYP2F1_RTOL
    )
    if not ok[0]:
        raise NoConvergentRepresentation(f"2F1 series did not settle in {HYP2F1_MAX_TERMS} terms at z={z}")
    return complex(vals[0])


def hyp2f1(a, b, c, z) -> complex:
    """Gauss hypergeometric function ``2F1(a, b; c; z)``.

    Terminating parameters give a finite sum valid for every ``z``.
    Otherwise the power series is summed for ``|z| < 0.9`` and the Pfaff
    transformation ``(1-z)^(-a) 2F1(a, c-b; c; z/(z-1))`` is used beyond
    that when it lands inside the same disc.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    terminating = [p for p in (a, b) if is_nonpositive_integer(p)]
    if terminating:
        n_terms = int(-max(p.real for p in terminating))
        if is_nonpositive_integer(c) and -c.real < n_terms:
            raise PoleInC(f"c = {c.real:g} is hit before the series terminates at order {n_terms}")
        return _terminating_sum(a, b, c, z, n_terms)
    if is_nonpositive_integer(c):
        raise PoleInC(f"c = {c.real:g} is a non-positive integer")
    if z == 0:
        return 1.0 + 0j
    if abs(z) < PFAFF_THRESHOLD:
        return _series(a, b, c, z)
    if z == 1:
        raise NoConvergentRepresentation("z = 1 needs a terminating series")
    w = z / (z - 1.0)
    if abs(w) < PFAFF_THRESHOLD:
        return (1.0 - z) ** (-a) * _series(a, c - b, c, w)
    raise NoConvergentRepresentation(f"neither z={z} nor z/(z-1)={w} lies in |.| < {PFAFF_THRESHOLD}")


def gen_binomial(x, y) -> complex:
    """Generalized binomial coefficient ``Γ(x+1) / (Γ(y+1) Γ(x-y+1))``.

    Poles in the denominator give 0.  When ``x`` is a negative integer the
    numerator pole is cancelled by the reflection identity
    ``C(-n, k) = (-1)^k C(n+k-1, k)`` if ``y`` or ``x - y`` is a non-negative
    integer; anything else is unresolvable.
    """
    x, y = complex(x), complex(y)
    if not is_nonpositive_integer(x + 1):
        return gamma(x + 1) * rgamma(y + 1) * rgamma(x - y + 1)
    n = int(round(-x.real))
    for k in (y, x - y):
        if _is_integer(k) and k.real >= 0:
            k = int(round(k.real))
            return complex((-1) ** k * math.comb(n + k - 1, k))
    raise UnresolvablePole(f"binomial({x}, {y}) has an uncancelled pole in Γ(x+1)")
