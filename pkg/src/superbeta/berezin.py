"""Berezin integration over the odd generators of a Grassmann algebra.

Conventions: ``∫ θ_i dθ_i = 1`` with ``θ_i`` moved to the rightmost position
first, and multiple integrals are iterated in ascending generator order.
Consequently ``integrate_all(θ_{m-1} ... θ_1 θ_0) = 1`` while
``integrate_all(θ_0 θ_1) = -1`` on two generators.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from . import _kernels
from .errors import DimensionMismatch, IndexOutOfRange, SingularMatrix
from .grassmann import GrassmannElement

__all__ = [
    "integrate_one",
    "integrate_over",
    "integrate_all",
    "substitute",
    "change_of_variables_odd",
]


def integrate_one(x: GrassmannElement, gen: int) -> GrassmannElement:
    """Integrate ``x`` against ``dθ_gen``.

    Terms without ``θ_gen`` vanish; the rest lose ``θ_gen`` after it is
    anticommuted to the right end of the monomial.
    """
    if not 0 <= gen < x.dim:
        raise IndexOutOfRange(f"generator θ{gen} outside an algebra with {x.dim} generators")
    keys, coefs = _kernels.integrate_terms(x._keys, x._coefs, gen)
    if keys.size == 0:
        coefs = np.zeros((0, 1), np.complex128)
    return GrassmannElement._new(x.algebra, keys, coefs, x._batch)


def integrate_over(x: GrassmannElement, gens: Sequence[int]) -> GrassmannElement:
    """Iterated integration over ``gens``, innermost (first) is the smallest index."""
    gens = sorted(int(g) for g in gens)
    if len(set(gens)) != len(gens):
        raise ValueError("repeated generator in integration measure")
    for g in gens:
        x = integrate_one(x, g)
    return x


def integrate_all(x: GrassmannElement):
    """Integral over every generator: a complex number (an array if batched).

    Read off directly as the top coefficient times ``(-1)^(m(m-1)/2)``, the
    sign that reverses ``θ_0 ... θ_{m-1}``; this agrees with
    ``integrate_over(x, range(m))``.
    """
    m = x.dim
    top = x.coefficient(range(m))
    return top if (m * (m - 1) // 2) % 2 == 0 else -top


def substitute(x: GrassmannElement, images: Sequence[GrassmannElement]) -> GrassmannElement:
    """Replace generator ``θ_i`` of ``x`` by ``images[i]``.

    The images must share one algebra (possibly different from x's) and
    should be odd for the result to be an algebra homomorphism.
    """
    if len(images) != x.dim:
        raise DimensionMismatch(f"need {x.dim} images, got {len(images)}")
    if images:
        target = images[0].algebra
        if any(im.dim != target.dim for im in images):
            raise DimensionMismatch("images live in different algebras")
    else:
        target = x.algebra
    out = target.zero()
    for mono, c in x.terms().items():
        term = target.scalar(c)
        for i in mono.indices:
            term = term * images[i]
        out = out + term
    return out


def change_of_variables_odd(x: GrassmannElement, A) -> GrassmannElement:
    """Linear odd change of variables ``η_i = Σ_j A_ij θ_j``.

    ``x`` is read as a function of the ``η``; the result is the substituted
    element times ``det(A)⁻¹`` (the Berezinian of a purely odd Jacobian), so
    ``integrate_all`` is preserved.
    """
    A = np.asarray(A, dtype=np.complex128)
    m = x.dim
    if A.shape != (m, m):
        raise DimensionMismatch(f"expected a {m}x{m} matrix, got shape {A.shape}")
    if m:
        sv = np.linalg.svd(A, compute_uv=False)
        if sv[-1] <= 1e-12 * sv[0]:
            raise SingularMatrix("change-of-variables matrix is singular")
    det = np.linalg.det(A) if m else 1.0
    gens = x.algebra.generators()
    images = [sum((A[i, j] * gens[j] for j in range(m)), x.algebra.zero()) for i in range(m)]
    return substitute(x, images) * (1.0 / det)

