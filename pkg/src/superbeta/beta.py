"""Beta super-integrals on ``G_{2|1,3|2}`` and their classical counterparts.

Two independent routes evaluate the same quantity:

* ``beta_super_numeric`` expands ``(1-u+ηθ)^p1 (ξ+ξ'u+θ)^p2 θ`` in a
  two-generator Grassmann algebra, integrates out ``θ`` and applies a
  Gauss-Jacobi rule carrying ``u^s (1-u)^p1``;
* ``beta_super_closed`` uses ``Γ(s+1)Γ(p1+1)/Γ(s+p1+2) ξ^p2 2F1(-p2, s+1; s+p1+2; -ξ'/ξ)``.

``phi_super_raw`` goes further back: it builds the reduced point of the
super-Grassmannian, reads the affine forms off the row action and
integrates in the original coordinate ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .berezin import integrate_one, integrate_over
from .errors import (
    DomainError,
    NonIntegerPowerOnOddForm,
    SineZero,
    UnboundedChamber,
    ZeroBodyNonIntegerPower,
)
from .grassmann import GrassmannAlgebra, GrassmannElement, power
from .quad import default_nodes, gauss_jacobi, integrate, integrate_halfline
from .specfun import beta_classical, gamma, gen_binomial, hyp2f1, sinpi
from .supergrass import ReducedPoint, affine_forms_2131_32, affine_forms_general, point_2131_32

__all__ = [
    "BetaParams",
    "ClassicalParams",
    "GeneralSuperBetaParams",
    "CheckResult",
    "RamanujanResult",
    "integrand_expand",
    "beta_super_numeric",
    "beta_super_closed",
    "phi_super",
    "phi_super_raw",
    "general_superbeta",
    "general_superbeta_element",
    "classical_phi",
    "classical_phi_closed",
    "transposition_check",
    "binomial_relation_check",
    "ramanujan_check",
    "general_point_2131",
]

SINE_ZERO_TOL = 1e-10


def _real(x, name: str) -> float:
    z = complex(x)
    if z.imag != 0:
        raise DomainError(f"{name} must be real for numerical integration, got {x}")
    return z.real


def _is_natural(p) -> bool:
    z = complex(p)
    return z.imag == 0 and z.real >= 0 and float(z.real).is_integer()


@dataclass(frozen=True)
class BetaParams:
    """Exponents ``s, p1, p2``, coefficients ``ξ, ξ'``, nilpotent weight ``η`` and chart coordinate ``x21``."""

    s: complex
    p1: complex
    p2: complex
    xi: complex = 1.0
    xi_prime: complex = 0.0
    eta: complex = 0.0
    x21: float = -1.0

    def __post_init__(self):
        x21 = complex(self.x21)
        if x21.imag != 0 or x21.real >= 0:
            raise DomainError(f"x21 must be a negative real number, got {self.x21}")
        object.__setattr__(self, "x21", x21.real)
        if complex(self.xi) == 0 and not _is_natural(self.p2):
            raise ZeroBodyNonIntegerPower("xi = 0 requires p2 to be a non-negative integer")


@dataclass(frozen=True)
class ClassicalParams:
    """``Φ(α, β) = ∫_0^{-y1/y2} t^α (y1 + y2 t)^β dt`` with ``y1 > 0 > y2``."""

    alpha: float
    beta: float
    y1: float = 1.0
    y2: float = -1.0

    def __post_init__(self):
        for name in ("alpha", "beta", "y1", "y2"):
            object.__setattr__(self, name, _real(getattr(self, name), name))
        if self.alpha <= -1 or self.beta <= -1:
            raise DomainError(f"alpha and beta must exceed -1, got {self.alpha}, {self.beta}")
        if not (self.y1 > 0 and self.y2 < 0):
            raise DomainError(f"need y1 > 0 and y2 < 0, got y1={self.y1}, y2={self.y2}")

    @property
    def endpoint(self) -> float:
        return -self.y1 / self.y2


@dataclass(frozen=True)
class GeneralSuperBetaParams:
    """Exponents ``(s1, s2, s3)`` of the even forms and ``σ`` of the odd forms at ``point``."""

    exponents: tuple
    sigma: tuple
    point: ReducedPoint = field(repr=False)

    def __post_init__(self):
        if len(self.exponents) != 3:
            raise DomainError("need exactly three even exponents")
        if len(self.sigma) != self.point.m:
            raise DomainError(f"need {self.point.m} odd exponents, got {len(self.sigma)}")


class CheckResult(NamedTuple):
    lhs: complex
    rhs: complex
    error: float


class RamanujanResult(NamedTuple):
    mellin: complex
    closed: complex
    error: float
    series_error: float
    nodes: int


def _rel_err(a: complex, b: complex) -> float:
    scale = abs(b)
    return abs(a - b) / scale if scale else abs(a - b)


def _check_segment(xi: complex, xi_prime: complex, p2) -> None:
    """Non-integer powers of ``ξ + ξ'u`` need the segment to avoid (-∞, 0]."""
    if _is_natural(p2):
        return
    a, b = complex(xi), complex(xi) + complex(xi_prime)
    if a == 0 or b == 0:
        raise ZeroBodyNonIntegerPower("xi + xi' u vanishes on [0, 1]")
    # find where the segment crosses the real axis, if anywhere
    if a.imag == b.imag == 0:
        if min(a.real, b.real) <= 0:
            raise ZeroBodyNonIntegerPower("xi + xi' u is not positive on [0, 1]")
        return
    if a.imag * b.imag <= 0:
        lam = a.imag / (a.imag - b.imag)
        cross = a.real + lam * (b.real - a.real)
        if cross <= 0:
            raise DomainError("xi + xi' u crosses the branch cut of the principal power on [0, 1]")


def _theta_integrand(p: BetaParams, u: np.ndarray) -> np.ndarray:
    """θ-integrated ``(1-u+ηθ)^p1 (ξ+ξ'u+θ)^p2 θ`` at the points ``u`` (η at index 0, θ at 1)."""
    alg = GrassmannAlgebra(2)
    eta_g, theta = alg.generators()
    l1 = alg.scalar(1.0 - u) + complex(p.eta) * (eta_g * theta)
    l2 = alg.scalar(complex(p.xi) + complex(p.xi_prime) * u) + theta
    expr = power(l1, p.p1) * power(l2, p.p2) * theta
    res = integrate_one(expr, 1)
    if not res.soul.is_zero():
        raise RuntimeError("η-dependence survived the Berezin integration")
    return np.broadcast_to(res.body, u.shape)


def integrand_expand(p: BetaParams):
    """The even function ``u ↦ u^s · ∫ (1-u+ηθ)^p1 (ξ+ξ'u+θ)^p2 θ dθ``.

    The odd expansion is carried out in a Grassmann algebra on the
    generators ``η, θ``; the returned callable accepts scalars or arrays.
    """
    _check_segment(p.xi, p.xi_prime, p.p2)

    def f(u):
        u_arr = np.atleast_1d(np.asarray(u, dtype=np.float64))
        vals = u_arr.astype(np.complex128) ** complex(p.s) * _theta_integrand(p, u_arr)
        return complex(vals[0]) if np.ndim(u) == 0 else vals

    return f


def beta_super_numeric(p: BetaParams, N: int | None = None) -> complex:
    """``B(s, p1, p2; ξ, ξ', η)`` by odd expansion and Gauss-Jacobi quadrature."""
    s, p1 = _real(p.s, "s"), _real(p.p1, "p1")
    _check_segment(p.xi, p.xi_prime, p.p2)
    rule = gauss_jacobi(s, p1, N or default_nodes())
    # the rule already carries u^s (1-u)^p1; divide the expanded integrand by it
    return integrate(lambda u: _theta_integrand(p, u) / (1.0 - u) ** p1, rule)


def beta_super_closed(p: BetaParams) -> complex:
    """Closed form ``Γ(s+1)Γ(p1+1)/Γ(s+p1+2) · ξ^p2 · 2F1(-p2, s+1; s+p1+2; -ξ'/ξ)``."""
    s, p1, p2 = complex(p.s), complex(p.p1), complex(p.p2)
    xi, xi_prime = complex(p.xi), complex(p.xi_prime)
    if xi == 0:
        # only natural p2 gets here; (ξ' u)^p2 splits off u^p2
        return xi_prime**p2 * beta_classical(s + p2 + 1, p1 + 1)
    prefactor = gamma(s + 1) * gamma(p1 + 1) / gamma(s + p1 + 2)
    return prefactor * xi**p2 * hyp2f1(-p2, s + 1, s + p1 + 2, -xi_prime / xi)


def phi_super(p: BetaParams, N: int | None = None) -> complex:
    """``Φ = -(-x21)^(-s-1) B`` with the quadrature value of ``B``."""
    return -((-p.x21) ** (-complex(p.s) - 1.0)) * beta_super_numeric(p, N)


def phi_super_raw(p: BetaParams, N: int | None = None) -> complex:
    """``Φ`` straight from the chart: integrate over ``θ`` then over ``t`` from ``-1/x21`` to 0.

    The point has ``x11 = 1``, ``η11 = η·η_0``, ``ξ12 = ξ`` and
    ``ξ22 = -ξ' x21``.  Nodes come from a Jacobi rule on ``t = -v/x21``.
    """
    s, p1 = _real(p.s, "s"), _real(p.p1, "p1")
    _check_segment(p.xi, p.xi_prime, p.p2)
    point_alg = GrassmannAlgebra(1)
    eta11 = complex(p.eta) * point_alg.generator(0)
    xi22 = -complex(p.xi_prime) * p.x21
    point = point_2131_32(1.0, p.x21, eta11, complex(p.xi), xi22, 1.0, point_alg, enforce_parity=False)
    fam = affine_forms_2131_32(point)
    theta = fam.algebra.generator(fam.theta[0])

    T = -1.0 / p.x21
    rule = gauss_jacobi(s, p1, N or default_nodes())
    t = T * rule.nodes
    (l1,), (l2,) = fam.evaluate(t)
    expr = power(l1, p.p1) * power(l2, p.p2) * theta
    res = integrate_one(expr, fam.theta[0])
    if not res.soul.is_zero():
        raise RuntimeError("η-dependence survived the Berezin integration")
    body = np.broadcast_to(res.body, t.shape)
    weight_t = t**s * (1.0 + p.x21 * t) ** p1
    vals = t.astype(np.complex128) ** s * body / weight_t
    # the rule integrates v in (0, 1) against v^s (1-v)^p1; in t this is T^(s+1) t^s (1 + x21 t)^p1
    forward = T ** (s + 1.0) * complex(np.dot(rule.weights, vals))
    return -forward  # the t-integral runs from -1/x21 down to 0


def _form_is_purely_odd(form) -> bool:
    return np.all(np.asarray(form.const.body) == 0) and np.all(np.asarray(form.slope.body) == 0)


def general_superbeta_element(g: GeneralSuperBetaParams, N: int | None = None) -> GrassmannElement:
    """General super-beta integral as an element of the point's algebra.

    Integrates ``l1^s1 l2^s2 l3^s3 λ_1^σ_1 ... λ_m^σ_m`` against
    ``dt dθ_1 ... dθ_l`` over the chamber ``0 < t < -x11/x21`` bounded by the
    zeros of ``l3 = t`` and ``l1``.  Odd forms without a body only accept
    ``σ ∈ {0, 1}``.
    """
    p = g.point
    fam = affine_forms_general(p)
    s1, s2, s3 = (_real(e, f"s{i + 1}") for i, e in enumerate(g.exponents))
    x11, x21 = complex(p.matrix[0, 0].body), complex(p.matrix[1, 0].body)
    if x21 == 0:
        raise UnboundedChamber("x21 = 0: the forms l1 and l3 bound no finite chamber")
    if x11.imag != 0 or x21.imag != 0 or not (x11.real > 0 and x21.real < 0):
        raise DomainError("the chamber (0, -x11/x21) needs real x11 > 0 and x21 < 0")
    for form, sigma in zip(fam.odd_forms, g.sigma):
        if _form_is_purely_odd(form) and complex(sigma) not in (0, 1):
            raise NonIntegerPowerOnOddForm(f"purely odd form raised to {sigma}; only 0 or 1 is defined")

    T = -x11.real / x21.real
    rule = gauss_jacobi(s3, s1, N or default_nodes())
    t = T * rule.nodes
    evens, odds = fam.evaluate(t)
    expr = power(evens[0], s1) * power(evens[1], s2) * power(evens[2], s3)
    for lam, sigma in zip(odds, g.sigma):
        expr = expr * power(lam, sigma)
    res = integrate_over(expr, fam.theta)
    # with t = T v the rule's weight v^s3 (1-v)^s1 is T^-s3 x11^-s1 t^s3 (x11 + x21 t)^s1
    weight_t = t**s3 * (x11.real + x21.real * t) ** s1
    scale = T ** (s3 + 1.0) * x11.real**s1
    if res.batch is None:
        res = res * np.ones_like(t)
    out = res.contract(rule.weights / weight_t * scale)
    return out.restrict(p.algebra.dim)


def general_superbeta(g: GeneralSuperBetaParams, N: int | None = None) -> complex:
    """Numeric value of :func:`general_superbeta_element`; errors if a soul survives."""
    el = general_superbeta_element(g, N)
    if not el.soul.is_zero():
        raise DomainError("the integral still depends on odd coordinates of the point")
    return complex(el.body)


def classical_phi(c: ClassicalParams, N: int | None = None) -> complex:
    """Quadrature of ``∫_0^{-y1/y2} t^α (y1 + y2 t)^β dt``.

    A Jacobi rule on ``t = -v y1/y2`` takes both endpoint singularities; the
    integrand is evaluated in ``t`` and divided by the rule's weight.
    """
    T = c.endpoint
    rule = gauss_jacobi(c.alpha, c.beta, N or default_nodes())

    def f(v):
        t = T * v
        return t**c.alpha * (c.y1 + c.y2 * t) ** c.beta / (v**c.alpha * (1.0 - v) ** c.beta) * T

    return integrate(f, rule)


def classical_phi_closed(c: ClassicalParams) -> complex:
    """``y1^(α+β+1) (-y2)^(-α-1) B(α+1, β+1)``."""
    return c.y1 ** (c.alpha + c.beta + 1.0) * (-c.y2) ** (-c.alpha - 1.0) * beta_classical(c.alpha + 1, c.beta + 1)


def transposition_check(c: ClassicalParams, N: int | None = None) -> CheckResult:
    """``Φ(β, α)`` against ``(-y2)^(α-β) Φ(α, β)``, both by quadrature."""
    swapped = ClassicalParams(c.beta, c.alpha, c.y1, c.y2)
    lhs = classical_phi(swapped, N)
    rhs = (-c.y2) ** (c.alpha - c.beta) * classical_phi(c, N)
    return CheckResult(lhs, rhs, _rel_err(lhs, rhs))


def binomial_relation_check(c: ClassicalParams, N: int | None = None) -> CheckResult:
    """Sine-weighted ``Φ(α, β)`` against ``binom(-α-β-2, -α-1)``."""
    a, b = c.alpha, c.beta
    sines = [sinpi(a + 1), sinpi(b + 1), sinpi(a + b + 2)]
    if min(abs(x) for x in sines) < SINE_ZERO_TOL:
        raise SineZero(f"alpha={a}, beta={b}: a sine factor vanishes (integer parameter)")
    factor = sines[0] * sines[1] / (math.pi * sines[2])
    lhs = factor * c.y1 ** (-a - b - 1.0) * (-c.y2) ** (a + 1.0) * classical_phi(c, N)
    rhs = gen_binomial(-a - b - 2.0, -a - 1.0)
    return CheckResult(lhs, rhs, _rel_err(lhs, rhs))


def ramanujan_check(c: float, s: float, N: int | None = None, series_points: int = 10) -> RamanujanResult:
    """Mellin transform of ``1/(1+ct)`` against ``π/sin(πs) c^-s``.

    Also sums ``Σ (-ct)^n`` at ``series_points`` points of ``[0, 0.9/c]`` and
    reports its largest deviation from ``1/(1+ct)``.
    """
    c, s = _real(c, "c"), _real(s, "s")
    if c <= 0 or not 0 < s < 1:
        raise DomainError(f"need c > 0 and 0 < s < 1, got c={c}, s={s}")
    mellin, nodes = integrate_halfline(lambda t: t ** (s - 1.0) / (1.0 + c * t), N or default_nodes(),
                                       full_output=True)
    closed = math.pi / sinpi(s).real * c ** (-s)
    ts = np.linspace(0.0, 0.9 / c, series_points)
    worst = 0.0
    for t in ts:
        total, term, n = 0.0, 1.0, 0
        while abs(term) > 1e-18 and n < 10_000:
            total += term
            n += 1
            term *= -c * t
        worst = max(worst, abs(total - 1.0 / (1.0 + c * t)))
    return RamanujanResult(mellin, closed, _rel_err(mellin, closed), worst, nodes)


def general_point_2131(xi: complex, xi_prime: complex, eta: complex = 0.0, x11: float = 1.0,
                       x21: float = -1.0) -> ReducedPoint:
    """Reduced ``G_{2|1,3|2}`` point matching :class:`BetaParams` data (η on generator 0)."""
    alg = GrassmannAlgebra(1)
    xi22 = -complex(xi_prime) * x21 / x11
    return point_2131_32(x11, x21, complex(eta) * alg.generator(0), complex(xi), xi22, 1.0, alg,
                         enforce_parity=False)
