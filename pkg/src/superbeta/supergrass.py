"""Charts on super-Grassmannians ``G_{k|l, n|m}``.

A point is a ``(k+l) x (n+m)`` supermatrix of maximal rank: ``k`` even rows
then ``l`` odd rows, ``n`` even columns then ``m`` odd columns.  A chart picks
``k`` even and ``l`` odd columns; on its domain the corresponding minor ``U``
is invertible and the point is represented by ``U⁻¹A``, whose chart columns
form the identity.  Odd column indices in a :class:`Chart` count from the
start of the odd block.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import DimensionMismatch, SingularMinor, ZeroBody
from .grassmann import GrassmannAlgebra, GrassmannElement, Parity
from .supermatrix import SuperMatrix, inverse, numeric_rank

__all__ = [
    "Chart",
    "ReducedPoint",
    "AffineForm",
    "AffineFormFamily",
    "BETA_CHART",
    "general_chart",
    "chart_count",
    "charts",
    "minor",
    "is_valid_chart",
    "valid_charts",
    "reduce",
    "transition",
    "point_2131_32",
    "point_general",
    "affine_forms_general",
    "affine_forms_2131_32",
    "chart_labels",
    "g2244_demo",
]


@dataclass(frozen=True, order=True)
class Chart:
    even_cols: tuple[int, ...]
    odd_cols: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("even_cols", "odd_cols"):
            cols = tuple(int(c) for c in getattr(self, name))
            if any(c < 0 for c in cols) or any(b <= a for a, b in zip(cols, cols[1:])):
                raise ValueError(f"{name} must be strictly increasing non-negative indices, got {cols}")
            object.__setattr__(self, name, cols)

    @property
    def k(self) -> int:
        return len(self.even_cols)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.odd_cols)

    def columns(self, n: int) -> list[int]:
        """Absolute column indices in a matrix with ``n`` even columns."""
        return list(self.even_cols) + [n + j for j in self.odd_cols]

    def __str__(self):
        return f"even{self.even_cols}|odd{self.odd_cols}"


# Chart used for the beta integral on G_{2|1,3|2}: even columns 1, 2 and odd column 0.
BETA_CHART = Chart((1, 2), (0,))


def general_chart(l: int) -> Chart:  # noqa: E741
    """The chart for ``G_{2|l,3|m}`` with identity in even columns 1, 2 and odd 0..l-1."""
    return Chart((1, 2), tuple(range(l)))


@dataclass(frozen=True)
class ReducedPoint:
    """A point written as ``U⁻¹A`` in ``chart``; ``k, l, n, m`` fix the layout."""

    chart: Chart
    matrix: SuperMatrix
    k: int
    l: int  # noqa: E741
    n: int
    m: int

    @property
    def algebra(self) -> GrassmannAlgebra:
        return self.matrix.algebra

    def __getitem__(self, ij) -> GrassmannElement:
        return self.matrix[ij]


def _check_dims(k, l, n, m):  # noqa: E741
    if not (0 <= k <= n and 0 <= l <= m):
        raise DimensionMismatch(f"need 0 <= k <= n and 0 <= l <= m, got k={k}, l={l}, n={n}, m={m}")


def chart_count(k: int, l: int, n: int, m: int) -> int:  # noqa: E741
    _check_dims(k, l, n, m)
    return comb(n, k) * comb(m, l)


def charts(k: int, l: int, n: int, m: int) -> list[Chart]:  # noqa: E741
    """All charts, lexicographic in (even subset, odd subset)."""
    _check_dims(k, l, n, m)
    return [
        Chart(e, o)
        for e, o in itertools.product(itertools.combinations(range(n), k), itertools.combinations(range(m), l))
    ]


def _layout(A: SuperMatrix) -> tuple[int, int, int, int]:
    rows, cols = A.row_parities, A.col_parities
    k = sum(p == Parity.EVEN for p in rows)
    n = sum(p == Parity.EVEN for p in cols)
    if rows != (Parity.EVEN,) * k + (Parity.ODD,) * (len(rows) - k) or cols != (Parity.EVEN,) * n + (
        Parity.ODD,
    ) * (len(cols) - n):
        raise DimensionMismatch("rows and columns must list even entries before odd ones")
    return k, len(rows) - k, n, len(cols) - n


def _as_matrix(A) -> SuperMatrix:
    return A.matrix if isinstance(A, ReducedPoint) else A


def minor(A: SuperMatrix | ReducedPoint, c: Chart) -> SuperMatrix:
    A = _as_matrix(A)
    k, l, n, m = _layout(A)  # noqa: E741
    if c.k != k or c.l != l or any(j >= n for j in c.even_cols) or any(j >= m for j in c.odd_cols):
        raise DimensionMismatch(f"chart {c} does not fit G_{{{k}|{l},{n}|{m}}}")
    return A.submatrix(range(k + l), c.columns(n))


def is_valid_chart(A: SuperMatrix | ReducedPoint, c: Chart) -> bool:
    """True when the chart's minor has an invertible body at this point."""
    U = minor(A, c)
    return numeric_rank(U.body()) == U.shape[0]


def valid_charts(A: SuperMatrix | ReducedPoint) -> list[Chart]:
    A = _as_matrix(A)
    return [c for c in charts(*_layout(A)) if is_valid_chart(A, c)]


def reduce(A: SuperMatrix | ReducedPoint, c: Chart) -> ReducedPoint:
    """``U⁻¹A`` for the minor ``U`` selected by ``c``.

    The chart columns are set to the exact identity afterwards so that
    repeated reduction is idempotent bit for bit.
    """
    A = _as_matrix(A)
    k, l, n, m = _layout(A)  # noqa: E741
    U = minor(A, c)
    if numeric_rank(U.body()) < k + l:
        raise SingularMinor(f"minor for chart {c} is singular at this point")
    R = inverse(U, error=SingularMinor) @ A
    entries = [list(row) for row in R.entries]
    alg = A.algebra
    for r, col in enumerate(c.columns(n)):
        for i in range(k + l):
            entries[i][col] = alg.one() if i == r else alg.zero()
    M = SuperMatrix(R.row_parities, R.col_parities, entries, alg, R.enforce_parity)
    return ReducedPoint(c, M, k, l, n, m)


def transition(c1: Chart, c2: Chart, p: ReducedPoint) -> ReducedPoint:
    """Move a point reduced in ``c1`` into chart ``c2``."""
    if p.chart != c1:
        raise ValueError(f"point is reduced in {p.chart}, not {c1}")
    return reduce(p.matrix, c2)


def _entry(alg: GrassmannAlgebra, v) -> GrassmannElement:
    return v if isinstance(v, GrassmannElement) else alg.scalar(v)


def point_general(x, eta, xi, y, algebra: GrassmannAlgebra, enforce_parity: bool = True) -> ReducedPoint:
    """Point of ``G_{2|l,3|m}`` in :func:`general_chart`.

    ``x`` is the length-2 first column, ``eta`` the length-``l`` odd-row
    first column, ``xi`` a ``2 x (m-l)`` and ``y`` an ``l x (m-l)`` block.
    """
    l = len(eta)  # noqa: E741
    xi = [list(r) for r in xi]
    y = [list(r) for r in y] if l else []
    if len(x) != 2 or len(xi) != 2:
        raise DimensionMismatch("x and xi need two rows")
    free = len(xi[0])
    if len(xi[1]) != free or len(y) != l or any(len(r) != free for r in y):
        raise DimensionMismatch("xi and y must share the number of free odd columns")
    m = l + free
    rows = []
    for i in range(2):
        rows.append([x[i], 1.0 if i == 0 else 0.0, 1.0 if i == 1 else 0.0] + [0.0] * l + xi[i])
    for a in range(l):
        rows.append([eta[a], 0.0, 0.0] + [1.0 if b == a else 0.0 for b in range(l)] + y[a])
    rows = [[_entry(algebra, v) for v in r] for r in rows]
    M = SuperMatrix([0, 0] + [1] * l, [0, 0, 0] + [1] * m, rows, algebra, enforce_parity)
    return ReducedPoint(general_chart(l), M, 2, l, 3, m)


def point_2131_32(x11, x21, eta11, xi12, xi22, y12=1.0, algebra: GrassmannAlgebra | None = None,
                  enforce_parity: bool = True) -> ReducedPoint:
    """Point of ``G_{2|1,3|2}`` in :data:`BETA_CHART`.

    The reduced matrix is
    ``[[x11, 1, 0 | 0, xi12], [x21, 0, 1 | 0, xi22], [eta11, 0, 0 | 1, y12]]``.
    """
    algebra = algebra or GrassmannAlgebra(0)
    return point_general([x11, x21], [eta11], [[xi12], [xi22]], [[y12]], algebra, enforce_parity)


@dataclass(frozen=True)
class AffineForm:
    """``const + slope * t`` with Grassmann-valued coefficients."""

    const: GrassmannElement
    slope: GrassmannElement

    def __call__(self, t) -> GrassmannElement:
        return self.const + self.slope * t


@dataclass(frozen=True)
class AffineFormFamily:
    """Affine forms in ``t`` and the odd variables ``θ``.

    ``algebra`` extends the point's algebra by the ``θ`` generators, whose
    indices are ``theta``.
    """

    algebra: GrassmannAlgebra
    theta: tuple[int, ...]
    even_forms: tuple[AffineForm, ...]
    odd_forms: tuple[AffineForm, ...]

    def evaluate(self, t) -> tuple[list[GrassmannElement], list[GrassmannElement]]:
        """Forms at ``t`` (a number, or an array for a batched evaluation)."""
        return [f(t) for f in self.even_forms], [f(t) for f in self.odd_forms]


def affine_forms_general(p: ReducedPoint, l: int | None = None, m: int | None = None) -> AffineFormFamily:  # noqa: E741
    """Forms obtained by acting with the row vector ``[1, t | θ_1 .. θ_l]`` on ``p``.

    The even forms are the images of the three even columns and the odd
    forms those of the ``m`` odd columns.  In :func:`general_chart` these are
    ``l1 = x11 + x21 t + Σ θ_i η_i1``, ``l2 = 1``, ``l3 = t`` and
    ``λ_i = θ_i`` for ``i <= l``.
    """
    l = p.l if l is None else l  # noqa: E741
    m = p.m if m is None else m
    if (p.k, p.n, p.l, p.m) != (2, 3, l, m):
        raise DimensionMismatch(f"expected a point of G_{{2|{l},3|{m}}}, got G_{{{p.k}|{p.l},{p.n}|{p.m}}}")
    if p.chart != general_chart(l):
        raise DimensionMismatch(f"point must be reduced in chart {general_chart(l)}, got {p.chart}")
    base = p.algebra.dim
    alg = GrassmannAlgebra(base + l, p.algebra.drop_tol)
    theta = tuple(range(base, base + l))
    A = p.matrix.map(lambda e: e.embed(base + l, alg.drop_tol), alg)
    gens = [alg.generator(i) for i in theta]
    row_const = SuperMatrix([0], A.row_parities, [[1.0, 0.0] + gens], alg, enforce_parity=False)
    row_slope = SuperMatrix([0], A.row_parities, [[0.0, 1.0] + [0.0] * l], alg, enforce_parity=False)
    const = (row_const @ A).entries[0]
    slope = (row_slope @ A).entries[0]
    forms = [AffineForm(const[j], slope[j]) for j in range(3 + m)]
    return AffineFormFamily(alg, theta, tuple(forms[:3]), tuple(forms[3:]))


def affine_forms_2131_32(p: ReducedPoint) -> AffineFormFamily:
    """The two forms used by the beta integral on ``G_{2|1,3|2}``.

    ``even_forms = (l1,)`` with ``l1`` the first even form divided by its
    constant term ``x11``, so ``l1 = 1 + (x21/x11) t + ...``; ``odd_forms =
    (l2,)`` with ``l2 = xi12 + xi22 t + θ`` (the ``θ`` coefficient ``y12`` is
    normalized to 1).
    """
    if (p.k, p.l, p.n, p.m) != (2, 1, 3, 2) or p.chart != BETA_CHART:
        raise DimensionMismatch("expected a point of G_{2|1,3|2} reduced in the beta chart")
    fam = affine_forms_general(p, 1, 2)
    x11 = p.matrix[0, 0]
    if np.any(np.asarray(x11.body) == 0):
        raise ZeroBody("constant term x11 of l1 has zero body")
    x11 = x11.embed(fam.algebra.dim)
    l1 = fam.even_forms[0]
    l1 = AffineForm(l1.const / x11, l1.slope / x11)
    theta = fam.algebra.generator(fam.theta[0])
    lam = fam.odd_forms[1]
    xi12 = p.matrix[0, 4].embed(fam.algebra.dim)
    l2 = AffineForm(xi12 + theta, lam.slope)
    return AffineFormFamily(fam.algebra, fam.theta, (l1,), (l2,))


def chart_labels(c: Chart, k: int, l: int, n: int, m: int) -> list[list[str]]:  # noqa: E741
    """Symbolic shape of ``U⁻¹A`` in chart ``c``.

    Free entries are named ``t`` (even row, even column), ``θ`` (even row,
    odd column), ``υ`` (odd row, even column) and ``u`` (odd row, odd
    column), indexed by row within its block and column within its parity
    (both 1-based).  Chart columns show the identity.
    """
    cols = c.columns(n)
    out = []
    for i in range(k + l):
        row = []
        odd_row = i >= k
        r = i - k if odd_row else i
        for j in range(n + m):
            if j in cols:
                row.append("1" if cols.index(j) == i else "0")
                continue
            odd_col = j >= n
            q = j - n if odd_col else j
            letter = {(False, False): "t", (False, True): "θ", (True, False): "υ", (True, True): "u"}[
                (odd_row, odd_col)
            ]
            row.append(f"{letter}{r + 1}{q + 1}")
        out.append(row)
    return out


def g2244_demo(rng: np.random.Generator | None = None, algebra_dim: int = 4) -> dict:
    """The ``G_{2|2,4|4}`` example: two charts, their shapes and the transition.

    Uses the charts with minor columns (3, 4, 5, 6) and (2, 4, 5, 6) in
    1-based numbering of all eight columns.
    """
    from .sampling import random_supermatrix

    rng = rng or np.random.default_rng(2244)
    alg = GrassmannAlgebra(algebra_dim)
    c = Chart((2, 3), (0, 1))
    c_prime = Chart((1, 3), (0, 1))
    while True:
        A = random_supermatrix(rng, [0, 0, 1, 1], [0] * 4 + [1] * 4, alg)
        if is_valid_chart(A, c) and is_valid_chart(A, c_prime):
            break
    B = reduce(A, c)
    B_prime = reduce(A, c_prime)
    via = transition(c, c_prime, B)
    err = (via.matrix - B_prime.matrix).max_abs()
    return {
        "A": A,
        "charts": (c, c_prime),
        "minor_columns": (
            [j + 1 for j in c.columns(4)],
            [j + 1 for j in c_prime.columns(4)],
        ),
        "B": B,
        "B_prime": B_prime,
        "labels": (chart_labels(c, 2, 2, 4, 4), chart_labels(c_prime, 2, 2, 4, 4)),
        "transition_error": err,
    }
