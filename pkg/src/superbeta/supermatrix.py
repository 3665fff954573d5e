"""Parity-graded matrices over a Grassmann algebra.

A :class:`SuperMatrix` carries a parity for every row and column; entry
``(i, j)`` must be homogeneous of parity ``row[i] XOR col[j]``.  Rows and
columns need not be sorted by parity: :func:`block_view` stably sorts them
and exposes the four blocks used by the Berezinian.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    ParityError,
    SingularBody,
    SingularOddOddBlock,
)
from .grassmann import GrassmannAlgebra, GrassmannElement, Parity, invert

__all__ = [
    "RANK_RTOL",
    "SuperMatrix",
    "BlockView",
    "block_view",
    "identity",
    "matmul",
    "det_even",
    "inverse",
    "berezinian",
    "numeric_rank",
]

# Relative singular-value threshold for deciding invertibility of body matrices.
RANK_RTOL = 1e-8


def _parities(seq) -> tuple[Parity, ...]:
    return tuple(Parity(int(p)) for p in seq)


def numeric_rank(body: np.ndarray, rtol: float = RANK_RTOL) -> int:
    """Numeric rank of a complex matrix, relative to its largest singular value."""
    if body.size == 0:
        return 0
    sv = np.linalg.svd(body, compute_uv=False)
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > rtol * sv[0]))


class SuperMatrix:
    """Immutable parity-graded matrix with Grassmann entries.

    ``entries`` is a nested sequence (or 2-D object array) of
    :class:`GrassmannElement` or plain numbers; numbers need ``algebra``.
    With ``enforce_parity=False`` the homogeneity check is skipped, which
    allows numeric values in odd slots (coordinates evaluated as ordinary
    numbers).
    """

    __slots__ = ("row_parities", "col_parities", "entries", "algebra", "enforce_parity")

    def __init__(
        self,
        row_parities: Sequence,
        col_parities: Sequence,
        entries,
        algebra: GrassmannAlgebra | None = None,
        enforce_parity: bool = True,
    ):
        rows = _parities(row_parities)
        cols = _parities(col_parities)
        raw = [list(r) for r in entries]
        if len(raw) != len(rows) or any(len(r) != len(cols) for r in raw):
            raise DimensionMismatch(f"entries do not match a {len(rows)}x{len(cols)} layout")
        if algebra is None:
            for r in raw:
                for e in r:
                    if isinstance(e, GrassmannElement):
                        algebra = e.algebra
                        break
                if algebra is not None:
                    break
        if algebra is None:
            raise ValueError("an algebra is required when no entry is a GrassmannElement")
        grid = np.empty((len(rows), len(cols)), dtype=object)
        for i, r in enumerate(raw):
            for j, e in enumerate(r):
                if not isinstance(e, GrassmannElement):
                    e = algebra.scalar(e)
                elif e.dim != algebra.dim:
                    raise DimensionMismatch("entries live in different algebras")
                if enforce_parity:
                    par = e.parity()
                    if not e.is_zero() and par != rows[i] ^ cols[j]:
                        raise ParityError(
                            f"entry ({i}, {j}) has parity {par}, expected {rows[i] ^ cols[j]}"
                        )
                grid[i, j] = e
        grid.flags.writeable = False
        self.row_parities = rows
        self.col_parities = cols
        self.entries = grid
        self.algebra = algebra
        self.enforce_parity = enforce_parity

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __getitem__(self, ij) -> GrassmannElement:
        return self.entries[ij]

    def body(self) -> np.ndarray:
        """Entry-wise body as a complex matrix."""
        out = np.zeros(self.shape, dtype=np.complex128)
        for (i, j), e in np.ndenumerate(self.entries):
            out[i, j] = e.body
        return out

    def max_abs(self) -> float:
        return max((e.max_abs() for e in self.entries.flat), default=0.0)

    def allclose(self, other: "SuperMatrix", atol: float = 1e-12) -> bool:
        if self.shape != other.shape:
            return False
        return all(a.allclose(b, atol) for a, b in zip(self.entries.flat, other.entries.flat))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SuperMatrix":
        rows, cols = list(rows), list(cols)
        return SuperMatrix(
            [self.row_parities[i] for i in rows],
            [self.col_parities[j] for j in cols],
            [[self.entries[i, j] for j in cols] for i in rows],
            self.algebra,
            self.enforce_parity,
        )

    def map(self, fn, algebra: GrassmannAlgebra | None = None) -> "SuperMatrix":
        """Apply ``fn`` to every entry (the parity layout is kept).

        Pass ``algebra`` when ``fn`` moves entries into a different algebra.
        """
        return SuperMatrix(
            self.row_parities,
            self.col_parities,
            [[fn(e) for e in row] for row in self.entries],
            algebra or self.algebra,
            self.enforce_parity,
        )

    def __matmul__(self, other):
        return matmul(self, other)

    def __sub__(self, other: "SuperMatrix") -> "SuperMatrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return SuperMatrix(
            self.row_parities,
            self.col_parities,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            self.algebra,
            self.enforce_parity and other.enforce_parity,
        )

    def __repr__(self):
        rows = "\n".join("  [" + ", ".join(str(e) for e in r) + "]" for r in self.entries)
        tag = lambda ps: "".join("0" if p == Parity.EVEN else "1" for p in ps)  # noqa: E731
        return f"SuperMatrix(rows={tag(self.row_parities)}, cols={tag(self.col_parities)},\n{rows})"


def identity(parities: Sequence, algebra: GrassmannAlgebra) -> SuperMatrix:
    n = len(parities)
    return SuperMatrix(parities, parities, np.eye(n), algebra)


def matmul(M: SuperMatrix, N: SuperMatrix) -> SuperMatrix:
    if M.shape[1] != N.shape[0]:
        raise DimensionMismatch(f"cannot multiply {M.shape} by {N.shape}")
    if M.algebra.dim != N.algebra.dim:
        raise DimensionMismatch("matrices live in different algebras")
    enforce = M.enforce_parity and N.enforce_parity
    if enforce and M.col_parities != N.row_parities:
        raise ParityError("column parities of the left factor differ from row parities of the right")
    zero = M.algebra.zero()
    out = [
        [sum((M.entries[i, k] * N.entries[k, j] for k in range(M.shape[1])), zero) for j in range(N.shape[1])]
        for i in range(M.shape[0])
    ]
    return SuperMatrix(M.row_parities, N.col_parities, out, M.algebra, enforce)


def _laplace(entries: np.ndarray, zero: GrassmannElement) -> GrassmannElement:
    n = entries.shape[0]
    if n == 0:
        return zero + 1.0
    if n == 1:
        return entries[0, 0]
    total = zero
    rest = list(range(1, n))
    for j in range(n):
        a = entries[0, j]
        if a.is_zero():
            continue
        cols = [c for c in range(n) if c != j]
        minor = _laplace(entries[np.ix_(rest, cols)], zero)
        total = total + a * minor if j % 2 == 0 else total - a * minor
    return total


def det_even(M: SuperMatrix) -> GrassmannElement:
    """Determinant of a square matrix whose entries are all even.

    Cofactor expansion along the first row; even entries commute, so the
    ordinary formula applies.
    """
    n, m = M.shape
    if n != m:
        raise DimensionMismatch(f"det_even needs a square matrix, got {M.shape}")
    for (i, j), e in np.ndenumerate(M.entries):
        if M.enforce_parity and e.parity() != Parity.EVEN:
            raise ParityError(f"entry ({i}, {j}) is not even")
    return _laplace(M.entries, M.algebra.zero())


def _scalar_matrix(values: np.ndarray, rows, cols, algebra, enforce) -> SuperMatrix:
    return SuperMatrix(rows, cols, values, algebra, enforce)


def inverse(M: SuperMatrix, error=SingularBody) -> SuperMatrix:
    """Two-sided inverse via the body inverse and a terminating Neumann series.

    Writing ``M = B (I + B⁻¹ N)`` with ``B`` the body matrix and ``N`` the
    nilpotent remainder, ``M⁻¹ = Σ_k (-B⁻¹ N)^k B⁻¹``.
    """
    n, m = M.shape
    if n != m:
        raise DimensionMismatch(f"inverse needs a square matrix, got {M.shape}")
    B = M.body()
    if numeric_rank(B) < n:
        raise error("body matrix is singular")
    Binv = np.linalg.inv(B)
    alg, enforce = M.algebra, M.enforce_parity
    Binv_m = _scalar_matrix(Binv, M.col_parities, M.row_parities, alg, enforce)
    nil = M - _scalar_matrix(B, M.row_parities, M.col_parities, alg, enforce)
    step = _scalar_matrix(-Binv, M.col_parities, M.row_parities, alg, enforce) @ nil
    term = Binv_m
    total = Binv_m
    for _ in range(alg.dim + 1):
        term = step @ term
        if all(e.is_zero() for e in term.entries.flat):
            break
        total = SuperMatrix(
            total.row_parities,
            total.col_parities,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(total.entries, term.entries)],
            alg,
            enforce,
        )
    return total


@dataclass(frozen=True)
class BlockView:
    """The four parity blocks of a square supermatrix after stable sorting.

    ``A`` is even-even, ``B`` even rows by odd columns, ``C`` odd rows by even
    columns, ``D`` odd-odd.  ``row_order``/``col_order`` record the sorting
    permutations so :meth:`assemble` can undo them.
    """

    A: SuperMatrix
    B: SuperMatrix
    C: SuperMatrix
    D: SuperMatrix
    row_order: tuple[int, ...]
    col_order: tuple[int, ...]

    def assemble(self) -> SuperMatrix:
        top = [list(ra) + list(rb) for ra, rb in zip(self.A.entries, self.B.entries)]
        bottom = [list(rc) + list(rd) for rc, rd in zip(self.C.entries, self.D.entries)]
        sorted_rows = top + bottom
        n_rows, n_cols = len(self.row_order), len(self.col_order)
        rows = [None] * n_rows
        row_par = [None] * n_rows
        col_par = [None] * n_cols
        sorted_row_par = self.A.row_parities + self.C.row_parities
        sorted_col_par = self.A.col_parities + self.B.col_parities
        for pos, i in enumerate(self.row_order):
            rows[i] = [None] * n_cols
            row_par[i] = sorted_row_par[pos]
            for qos, j in enumerate(self.col_order):
                rows[i][j] = sorted_rows[pos][qos]
                col_par[j] = sorted_col_par[qos]
        return SuperMatrix(row_par, col_par, rows, self.A.algebra, self.A.enforce_parity)


def _split(parities):
    even = [i for i, p in enumerate(parities) if p == Parity.EVEN]
    odd = [i for i, p in enumerate(parities) if p == Parity.ODD]
    return even, odd


def block_view(M: SuperMatrix) -> BlockView:
    re, ro = _split(M.row_parities)
    ce, co = _split(M.col_parities)
    return BlockView(
        A=M.submatrix(re, ce),
        B=M.submatrix(re, co),
        C=M.submatrix(ro, ce),
        D=M.submatrix(ro, co),
        row_order=tuple(re + ro),
        col_order=tuple(ce + co),
    )


def berezinian(M: SuperMatrix) -> GrassmannElement:
    """Superdeterminant ``det(A - B D⁻¹ C) · det(D)⁻¹``."""
    v = block_view(M)
    if v.A.shape[0] != v.A.shape[1] or v.D.shape[0] != v.D.shape[1]:
        raise DimensionMismatch(f"berezinian needs a p|q x p|q matrix, got blocks {v.A.shape} and {v.D.shape}")
    if v.D.shape[0] == 0:
        return det_even(v.A)
    Dinv = inverse(v.D, error=SingularOddOddBlock)
    schur = v.A - v.B @ Dinv @ v.C if v.A.shape[0] else v.A
    return det_even(schur) * invert(det_even(v.D))

