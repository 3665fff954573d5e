"""Gauss-Jacobi rules on [0, 1] and a graded Gauss-Legendre rule for [0, ∞)."""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal

from . import _kernels
from .errors import ExponentOutOfRange, NonConvergent
from .specfun import beta_classical

__all__ = [
    "DEFAULT_NODES",
    "default_nodes",
    "JacobiRule",
    "gauss_jacobi",
    "integrate",
    "legendre_unit",
    "integrate_halfline",
]

DEFAULT_NODES = 64


def default_nodes() -> int:
    """Quadrature order: ``SUPERBETA_NODES`` if set, else 64."""
    raw = os.environ.get("SUPERBETA_NODES")
    if raw is None or raw.strip() == "":
        return DEFAULT_NODES
    n = int(raw)
    if n < 1:
        raise ValueError(f"SUPERBETA_NODES must be a positive integer, got {raw!r}")
    return n


@dataclass(frozen=True)
class JacobiRule:
    """Nodes and weights for ``∫_0^1 u^a (1-u)^b f(u) du``."""

    order: int
    a: float
    b: float
    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        for arr in (self.nodes, self.weights):
            arr.flags.writeable = False


def _recurrence(alpha: float, beta: float, n: int):
    """Monic Jacobi recurrence on [-1, 1] for weight (1-x)^alpha (1+x)^beta."""
    k = np.arange(n, dtype=np.float64)
    s = 2.0 * k + alpha + beta
    with np.errstate(divide="ignore", invalid="ignore"):
        diag = (beta**2 - alpha**2) / (s * (s + 2.0))
    diag[0] = (beta - alpha) / (alpha + beta + 2.0)
    if n == 1:
        return diag, np.empty(0)
    j = np.arange(1, n, dtype=np.float64)
    sj = 2.0 * j + alpha + beta
    with np.errstate(divide="ignore", invalid="ignore"):
        off2 = 4.0 * j * (j + alpha) * (j + beta) * (j + alpha + beta) / (sj**2 * (sj + 1.0) * (sj - 1.0))
    # j = 1 written with the (1 + alpha + beta) factor cancelled
    off2[0] = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + alpha + beta) ** 2 * (3.0 + alpha + beta))
    return diag, np.sqrt(off2)


@functools.lru_cache(maxsize=256)
def gauss_jacobi(a: float, b: float, N: int) -> JacobiRule:
    """Golub-Welsch rule of order ``N`` for the weight ``u^a (1-u)^b`` on [0, 1].

    The rule is exact for polynomials of degree ``2N - 1`` and its weights
    sum to ``B(a+1, b+1)``.
    """
    a, b, N = float(a), float(b), int(N)
    if a <= -1 or b <= -1:
        raise ExponentOutOfRange(f"Jacobi exponents must exceed -1, got a={a}, b={b}")
    if N < 1:
        raise ValueError(f"need at least one node, got N={N}")
    # u = (1 + x)/2 turns u^a (1-u)^b into (1+x)^a (1-x)^b up to 2^-(a+b+1)
    diag, off = _recurrence(alpha=b, beta=a, n=N)
    x, vecs = eigh_tridiagonal(diag, off)
    mass = beta_classical(a + 1.0, b + 1.0).real
    weights = mass * vecs[0, :] ** 2
    nodes = 0.5 * (1.0 + x)
    return JacobiRule(N, a, b, nodes, weights)


def integrate(f, rule: JacobiRule) -> complex:
    """``Σ w_i f(u_i)``; ``f`` is called once on the whole node array."""
    vals = np.broadcast_to(np.asarray(f(rule.nodes), dtype=np.complex128), rule.nodes.shape)
    return complex(np.dot(rule.weights, vals))


@functools.lru_cache(maxsize=32)
def legendre_unit(N: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on (0, 1)."""
    x, w = _kernels.legendre_rule(int(N))
    nodes, weights = 0.5 * (1.0 + x), 0.5 * w
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def _halfline_once(g, N: int, grading: float) -> complex:
    v, w = legendre_unit(N)
    r = v / (1.0 - v)
    t = r**grading
    jac = grading * t / (v * (1.0 - v))
    vals = np.asarray(g(t), dtype=np.complex128)
    return complex(np.dot(w * jac, np.broadcast_to(vals, t.shape)))


def integrate_halfline(g, N: int = 64, tol: float = 1e-8, max_nodes: int = 2**14, grading: float = 4.0,
                       full_output: bool = False):
    """``∫_0^∞ g(t) dt`` by Gauss-Legendre after ``t = (v/(1-v))^grading``.

    The order doubles from ``N`` until two successive estimates agree to
    relative ``tol``.  The grading clusters nodes at both ends, which keeps
    algebraic endpoint behaviour such as ``t^(s-1)`` near 0 or ``t^-(1+s)``
    at infinity from stalling convergence.  With ``full_output`` the node
    count that met the tolerance is returned too.
    """
    if grading <= 0:
        raise ValueError("grading must be positive")
    n = int(N)
    prev = _halfline_once(g, n, grading)
    while True:
        if 2 * n > max_nodes:
            raise NonConvergent(f"half-line quadrature not converged at {n} nodes")
        n *= 2
        cur = _halfline_once(g, n, grading)
        if abs(cur - prev) <= tol * abs(cur) or (cur == 0 and prev == 0):
            return (cur, n) if full_output else cur
        prev = cur

