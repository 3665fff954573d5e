"""Random homogeneous Grassmann elements and supermatrices for property checks."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .grassmann import GrassmannAlgebra, GrassmannElement, OddMonomial, Parity
from .supermatrix import SuperMatrix

__all__ = ["random_element", "random_supermatrix", "random_odd_shift"]


def _normal(rng: np.random.Generator, size=None, complex_coefs=True):
    if complex_coefs:
        return (rng.normal(size=size) + 1j * rng.normal(size=size)) / np.sqrt(2.0)
    return rng.normal(size=size)


def random_element(
    rng: np.random.Generator,
    algebra: GrassmannAlgebra,
    parity: Parity | None = None,
    with_body: bool = True,
    complex_coefs: bool = True,
) -> GrassmannElement:
    """Element with unit-scale normal coefficients on every allowed monomial.

    ``parity`` restricts to even or odd monomials; ``with_body=False`` drops
    the unit monomial.
    """
    terms = {}
    for mask in range(1 << algebra.dim):
        deg = mask.bit_count()
        if parity is not None and deg % 2 != int(parity):
            continue
        if mask == 0 and not with_body:
            continue
        terms[OddMonomial.from_mask(mask)] = complex(_normal(rng, complex_coefs=complex_coefs))
    return algebra.element(terms)


def _conditioned(rng, n, min_sv, complex_coefs):
    while True:
        M = _normal(rng, (n, n), complex_coefs)
        if n == 0 or np.linalg.svd(M, compute_uv=False)[-1] >= min_sv:
            return M


def random_supermatrix(
    rng: np.random.Generator,
    row_parities: Sequence,
    col_parities: Sequence | None = None,
    algebra: GrassmannAlgebra | None = None,
    min_sv: float = 0.1,
    complex_coefs: bool = True,
) -> SuperMatrix:
    """Homogeneous random supermatrix.

    Even slots get a random body plus a random even soul; odd slots get a
    random odd element.  For a square p|q layout the even-even and odd-odd
    body blocks are redrawn until their smallest singular value is at least
    ``min_sv``.
    """
    rows = [Parity(int(p)) for p in row_parities]
    cols = rows if col_parities is None else [Parity(int(p)) for p in col_parities]
    algebra = algebra or GrassmannAlgebra(4)
    entries = [[None] * len(cols) for _ in rows]
    re = [i for i, p in enumerate(rows) if p == Parity.EVEN]
    ro = [i for i, p in enumerate(rows) if p == Parity.ODD]
    ce = [j for j, p in enumerate(cols) if p == Parity.EVEN]
    co = [j for j, p in enumerate(cols) if p == Parity.ODD]
    bodies = {}
    for r_idx, c_idx in ((re, ce), (ro, co)):
        if len(r_idx) == len(c_idx):
            block = _conditioned(rng, len(r_idx), min_sv, complex_coefs)
        else:
            block = _normal(rng, (len(r_idx), len(c_idx)), complex_coefs)
        for a, i in enumerate(r_idx):
            for b, j in enumerate(c_idx):
                bodies[i, j] = block[a, b]
    for i, rp in enumerate(rows):
        for j, cp in enumerate(cols):
            if rp == cp:
                soul = random_element(rng, algebra, Parity.EVEN, with_body=False, complex_coefs=complex_coefs)
                entries[i][j] = soul + bodies[i, j]
            else:
                entries[i][j] = random_element(rng, algebra, Parity.ODD, complex_coefs=complex_coefs)
    return SuperMatrix(rows, cols, entries, algebra)


def random_odd_shift(
    rng: np.random.Generator, algebra: GrassmannAlgebra, gens: Sequence[int], spare: Sequence[int]
) -> list[GrassmannElement]:
    """Images ``θ_g ↦ θ_g + ε_g`` with ``ε_g`` a random odd combination of ``spare`` generators."""
    images = list(algebra.generators())
    for g in gens:
        shift = algebra.zero()
        for s in spare:
            shift = shift + complex(_normal(rng)) * algebra.generator(s)
        images[g] = images[g] + shift
    return images
