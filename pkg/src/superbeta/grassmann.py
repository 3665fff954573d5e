"""Finite-generator Grassmann algebras.

An element of ``C[θ_0, ..., θ_{g-1}]`` is stored sparsely: a sorted array of
``uint64`` monomial masks and a matching array of complex coefficients.
Monomials are kept canonical (ascending generator order), so multiplying two
of them only needs the sign of the shuffle that sorts their concatenation.

Coefficients may also carry a one-dimensional *batch* axis.  A batched
element represents an even-coefficient function sampled at ``K`` points (the
quadrature nodes, typically): every arithmetic operation acts pointwise along
the batch, and unbatched operands broadcast against it.
"""

from __future__ import annotations

import enum
import numbers
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from . import _kernels
from .errors import DimensionMismatch, IndexOutOfRange, ZeroBody, ZeroBodyNonIntegerPower

__all__ = [
    "MAX_GENERATORS",
    "DEFAULT_DROP_TOL",
    "Parity",
    "OddMonomial",
    "GrassmannAlgebra",
    "GrassmannElement",
    "mono_mul",
    "add",
    "mul",
    "body",
    "soul",
    "power",
    "invert",
]

MAX_GENERATORS = 64
DEFAULT_DROP_TOL = 1e-14


class Parity(enum.IntEnum):
    EVEN = 0
    ODD = 1

    def __xor__(self, other):
        return Parity(int(self) ^ int(other))

    def __str__(self):
        return self.name.lower()


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, order=True)
class OddMonomial:
    """A canonical product ``θ_{i1} θ_{i2} ...`` with ``i1 < i2 < ...``.

    The empty product is the unit monomial.
    """

    indices: tuple[int, ...] = ()

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if any(i < 0 or i >= MAX_GENERATORS for i in idx):
            raise IndexOutOfRange(f"generator index out of range in {idx}")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"monomial indices must be strictly increasing, got {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def from_mask(cls, mask: int) -> "OddMonomial":
        return cls(_bits(int(mask)))

    @property
    def mask(self) -> int:
        m = 0
        for i in self.indices:
            m |= 1 << i
        return m

    @property
    def parity(self) -> Parity:
        return Parity(len(self.indices) % 2)

    def __len__(self):
        return len(self.indices)

    def __str__(self):
        return "".join(f"θ{i}" for i in self.indices) or "1"


def _sort_sign(seq: Iterable[int]) -> int:
    """Sign of the permutation sorting ``seq`` (counted by inversions)."""
    s = list(seq)
    inv = sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])
    return -1 if inv % 2 else 1


def mono_mul(a: OddMonomial, b: OddMonomial, dim: int = MAX_GENERATORS):
    """Product of two canonical monomials.

    Returns ``(sign, product)`` or ``None`` when the monomials share a
    generator (the product vanishes).
    """
    for i in a.indices + b.indices:
        if i >= dim:
            raise IndexOutOfRange(f"generator θ{i} outside an algebra with {dim} generators")
    if a.mask & b.mask:
        return None
    return _sort_sign(a.indices + b.indices), OddMonomial.from_mask(a.mask | b.mask)


def _is_integer(p) -> bool:
    z = complex(p)
    return z.imag == 0 and float(z.real).is_integer()


def _coef_row(c) -> tuple[np.ndarray, int | None]:
    """Coefficient (scalar or 1-D array) -> (row of shape (B,), batch)."""
    if isinstance(c, np.ndarray) and c.ndim > 0:
        if c.ndim != 1:
            raise ValueError("batched coefficients must be one-dimensional")
        return c.astype(np.complex128), c.shape[0]
    return np.array([complex(c)], dtype=np.complex128), None


def _merge_batch(b1, b2):
    if b1 is None:
        return b2
    if b2 is None or b1 == b2:
        return b1
    raise DimensionMismatch(f"batch sizes differ: {b1} vs {b2}")


@dataclass(frozen=True)
class GrassmannAlgebra:
    """The Grassmann algebra on ``dim`` generators.

    ``drop_tol`` is the modulus below which coefficients produced by
    arithmetic are discarded; ``0.0`` keeps everything except exact zeros.
    """

    dim: int
    drop_tol: float = DEFAULT_DROP_TOL

    def __post_init__(self):
        if not 0 <= self.dim <= MAX_GENERATORS:
            raise IndexOutOfRange(f"generator count must lie in [0, {MAX_GENERATORS}], got {self.dim}")
        if self.drop_tol < 0:
            raise ValueError("drop_tol must be non-negative")

    def zero(self) -> "GrassmannElement":
        return GrassmannElement._new(self, np.empty(0, np.uint64), np.empty((0, 1), np.complex128), None)

    def scalar(self, c) -> "GrassmannElement":
        row, batch = _coef_row(c)
        return GrassmannElement._new(self, np.zeros(1, np.uint64), row[None, :], batch)._pruned()

    def one(self) -> "GrassmannElement":
        return self.scalar(1.0)

    def generator(self, i: int) -> "GrassmannElement":
        return self.monomial((i,))

    def generators(self) -> tuple["GrassmannElement", ...]:
        return tuple(self.generator(i) for i in range(self.dim))

    def monomial(self, indices: Iterable[int], coef=1.0) -> "GrassmannElement":
        """``coef * θ_{i1} θ_{i2} ...`` in the given (not necessarily sorted) order."""
        return self.element({tuple(indices): coef})

    def element(self, terms: Mapping) -> "GrassmannElement":
        """Build an element from ``{indices or OddMonomial: coefficient}``.

        Index tuples may be in any order; they are sorted with the
        corresponding sign, and tuples with a repeated index contribute 0.
        """
        keys, rows, batch = [], [], None
        for mono, c in terms.items():
            idx = mono.indices if isinstance(mono, OddMonomial) else tuple(int(i) for i in mono)
            for i in idx:
                if not 0 <= i < self.dim:
                    raise IndexOutOfRange(f"generator θ{i} outside an algebra with {self.dim} generators")
            if len(set(idx)) != len(idx):
                continue
            row, b = _coef_row(c)
            batch = _merge_batch(batch, b)
            keys.append(OddMonomial(tuple(sorted(idx))).mask)
            rows.append(_sort_sign(idx) * row)
        if not keys:
            return self.zero()
        width = 1 if batch is None else batch
        coefs = np.stack([np.broadcast_to(r, (width,)) for r in rows])
        k, c = _kernels.combine_terms(np.array(keys, dtype=np.uint64), coefs, self.drop_tol)
        return GrassmannElement._new(self, k, c, batch)


class GrassmannElement:
    """Immutable element of a :class:`GrassmannAlgebra`.

    Supports ``+ - * / **`` with other elements of the same algebra and with
    scalars (or batch arrays, which act as even coefficients).
    """

    __slots__ = ("algebra", "_keys", "_coefs", "_batch")
    __array_ufunc__ = None  # keep numpy from broadcasting over us in ndarray * element

    @classmethod
    def _new(cls, algebra, keys, coefs, batch):
        self = object.__new__(cls)
        keys = np.ascontiguousarray(keys, dtype=np.uint64)
        coefs = np.ascontiguousarray(coefs, dtype=np.complex128)
        keys.flags.writeable = False
        coefs.flags.writeable = False
        self.algebra = algebra
        self._keys = keys
        self._coefs = coefs
        self._batch = batch
        return self

    def _pruned(self):
        if self._keys.size == 0:
            return self
        keep = np.abs(self._coefs).max(axis=1) > self.algebra.drop_tol
        if keep.all():
            return self
        return GrassmannElement._new(self.algebra, self._keys[keep], self._coefs[keep], self._batch)

    # -- inspection -------------------------------------------------------

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def batch(self) -> int | None:
        """Batch length, or ``None`` for a plain element."""
        return self._batch

    @property
    def nterms(self) -> int:
        return int(self._keys.size)

    def _value(self, row):
        return row.copy() if self._batch is not None else complex(row[0])

    def terms(self) -> dict[OddMonomial, complex | np.ndarray]:
        return {OddMonomial.from_mask(int(k)): self._value(c) for k, c in zip(self._keys, self._coefs)}

    def coefficient(self, mono: OddMonomial | Iterable[int]):
        if not isinstance(mono, OddMonomial):
            mono = OddMonomial(tuple(mono))
        hit = np.nonzero(self._keys == np.uint64(mono.mask))[0]
        if hit.size:
            return self._value(self._coefs[hit[0]])
        return self._value(np.zeros(1 if self._batch is None else self._batch, np.complex128))

    @property
    def body(self):
        """Coefficient of the unit monomial (an array when batched)."""
        return self.coefficient(OddMonomial())

    @property
    def soul(self) -> "GrassmannElement":
        keep = self._keys != 0
        return GrassmannElement._new(self.algebra, self._keys[keep], self._coefs[keep], self._batch)

    def is_zero(self) -> bool:
        return self._keys.size == 0

    def parity(self) -> Parity | None:
        """Parity of a homogeneous element; ``None`` if it mixes parities.

        Zero counts as even.
        """
        degrees = {int(k).bit_count() % 2 for k in self._keys}
        if len(degrees) > 1:
            return None
        return Parity(degrees.pop()) if degrees else Parity.EVEN

    def max_abs(self) -> float:
        return float(np.abs(self._coefs).max()) if self._keys.size else 0.0

    def allclose(self, other, atol: float = 1e-12) -> bool:
        """True when every coefficient of ``self - other`` has modulus <= atol."""
        return (self - other).max_abs() <= atol

    # -- structure --------------------------------------------------------

    def embed(self, dim: int, drop_tol: float | None = None) -> "GrassmannElement":
        """The same element inside an algebra with ``dim >= self.dim`` generators."""
        if dim < self.dim:
            raise DimensionMismatch(f"cannot embed {self.dim} generators into {dim}")
        alg = GrassmannAlgebra(dim, self.algebra.drop_tol if drop_tol is None else drop_tol)
        return GrassmannElement._new(alg, self._keys, self._coefs, self._batch)

    def restrict(self, dim: int) -> "GrassmannElement":
        """View in the subalgebra on the first ``dim`` generators."""
        if self._keys.size and int(self._keys.max()) >> dim:
            raise IndexOutOfRange(f"element involves generators beyond θ{dim - 1}")
        alg = GrassmannAlgebra(dim, self.algebra.drop_tol)
        return GrassmannElement._new(alg, self._keys, self._coefs, self._batch)

    def contract(self, weights) -> "GrassmannElement":
        """Sum a batched element along its batch axis with the given weights."""
        if self._batch is None:
            raise ValueError("contract() needs a batched element")
        w = np.asarray(weights)
        if w.shape != (self._batch,):
            raise DimensionMismatch(f"expected {self._batch} weights, got shape {w.shape}")
        coefs = np.broadcast_to(self._coefs, (self.nterms, self._batch))
        return GrassmannElement._new(self.algebra, self._keys, (coefs @ w)[:, None], None)._pruned()

    def map_coefficients(self, fn) -> "GrassmannElement":
        """Apply ``fn`` to each coefficient row (scalar or batch array)."""
        rows = [fn(self._value(c)) for c in self._coefs]
        return self.algebra.element({OddMonomial.from_mask(int(k)): r for k, r in zip(self._keys, rows)})

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "GrassmannElement":
        if isinstance(other, GrassmannElement):
            if other.dim != self.dim:
                raise DimensionMismatch(f"algebras differ: {self.dim} vs {other.dim} generators")
            return other
        return self.algebra.scalar(other)

    def _scale(self, c) -> "GrassmannElement":
        row, batch = _coef_row(c)
        batch = _merge_batch(self._batch, batch)
        return GrassmannElement._new(self.algebra, self._keys, self._coefs * row[None, :], batch)._pruned()

    def __add__(self, other):
        return add(self, self._coerce(other))

    def __radd__(self, other):
        return add(self._coerce(other), self)

    def __sub__(self, other):
        return add(self, -self._coerce(other))

    def __rsub__(self, other):
        return add(self._coerce(other), -self)

    def __neg__(self):
        return GrassmannElement._new(self.algebra, self._keys, -self._coefs, self._batch)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, GrassmannElement):
            return mul(self, other)
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def __truediv__(self, other):
        if isinstance(other, GrassmannElement):
            return mul(self, invert(other))
        row, _ = _coef_row(other)
        if np.any(row == 0):
            raise ZeroDivisionError("division by zero")
        return self._scale(1.0 / other)

    def __rtruediv__(self, other):
        return invert(self)._scale(other)

    def __pow__(self, p):
        return power(self, p)

    def __eq__(self, other):
        if isinstance(other, (GrassmannElement, numbers.Number)):
            other = self._coerce(other)
            return (
                self._batch == other._batch
                and np.array_equal(self._keys, other._keys)
                and np.array_equal(self._coefs, other._coefs)
            )
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        batch = "" if self._batch is None else f", batch={self._batch}"
        return f"GrassmannElement(dim={self.dim}{batch}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        if self._batch is not None:
            return " + ".join(f"[..]{'·' + str(OddMonomial.from_mask(int(k))) if k else ''}" for k in self._keys)
        parts = []
        for k, c in zip(self._keys, self._coefs[:, 0]):
            coef = f"{c.real:.6g}" if c.imag == 0 else f"({c.real:.6g}{c.imag:+.6g}j)"
            parts.append(coef if k == 0 else f"{coef}·{OddMonomial.from_mask(int(k))}")
        return " + ".join(parts)


def _check_pair(x: GrassmannElement, y: GrassmannElement):
    if x.dim != y.dim:
        raise DimensionMismatch(f"algebras differ: {x.dim} vs {y.dim} generators")
    return _merge_batch(x._batch, y._batch)


def add(x: GrassmannElement, y: GrassmannElement) -> GrassmannElement:
    batch = _check_pair(x, y)
    if x._batch == y._batch:
        if x._keys.size == 0:
            return y
        if y._keys.size == 0:
            return x
    width = 1 if batch is None else batch
    cx, cy = x._coefs, y._coefs
    if cx.shape[1] != width:
        cx = np.broadcast_to(cx, (x.nterms, width))
    if cy.shape[1] != width:
        cy = np.broadcast_to(cy, (y.nterms, width))
    coefs = np.concatenate([cx, cy])
    keys, coefs = _kernels.combine_terms(np.concatenate([x._keys, y._keys]), coefs, x.algebra.drop_tol)
    return GrassmannElement._new(x.algebra, keys, coefs, batch)


def mul(x: GrassmannElement, y: GrassmannElement) -> GrassmannElement:
    batch = _check_pair(x, y)
    keys, coefs = _kernels.mul_terms(x._keys, x._coefs, y._keys, y._coefs, x.algebra.drop_tol)
    if keys.size == 0:
        coefs = coefs.reshape(0, 1)
    return GrassmannElement._new(x.algebra, keys, coefs, batch)


def body(x: GrassmannElement):
    return x.body


def soul(x: GrassmannElement) -> GrassmannElement:
    return x.soul


def _nilpotent_series(x: GrassmannElement, ratio: GrassmannElement, coef_step) -> GrassmannElement:
    """Σ_k c_k ratio^k for nilpotent ``ratio``; ``coef_step(k)`` gives c_k/c_{k-1}."""
    total = x.algebra.one()
    term = x.algebra.one()
    c = 1.0
    for k in range(1, x.dim + 2):
        term = term * ratio
        if term.is_zero():
            break
        c = c * coef_step(k)
        total = total + c * term
    return total


def invert(x: GrassmannElement) -> GrassmannElement:
    """Multiplicative inverse ``body⁻¹ Σ_k (-soul/body)^k``."""
    b = x.body
    if np.any(np.asarray(b) == 0):
        raise ZeroBody("element with zero body is not invertible")
    inv_b = 1.0 / b
    return _nilpotent_series(x, x.soul * (-inv_b), lambda k: 1.0) * inv_b


def power(x: GrassmannElement, p) -> GrassmannElement:
    """``x**p``; non-integer ``p`` uses the principal branch of ``body**p``.

    Non-negative integers are exact repeated products, so they work for
    nilpotent ``x`` as well.  Anything else needs a nonzero body and is the
    finite binomial series ``body^p Σ_k C(p, k) (soul/body)^k``.
    """
    b = x.body
    if _is_integer(p) and complex(p).real >= 0:
        n = int(complex(p).real)
        result = x.algebra.one()
        base = x
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result
    if np.any(np.asarray(b) == 0):
        raise ZeroBodyNonIntegerPower(f"power {p} of an element with zero body")
    if _is_integer(p):
        return power(invert(x), -int(complex(p).real))
    p = complex(p) if not isinstance(p, numbers.Real) else float(p)
    ratio = x.soul * (1.0 / b)
    series = _nilpotent_series(x, ratio, lambda k: (p - k + 1) / k)
    return series * np.power(np.asarray(b, dtype=np.complex128), p)
