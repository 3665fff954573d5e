"""Hot inner loops in two interchangeable implementations.

Every kernel exists as a numba ``@njit`` loop (suffix ``_nb``) and as a
vectorised numpy routine (suffix ``_np``).  The unsuffixed public name is
bound at import time: numba when it is importable, unless the environment
variable ``SUPERBETA_BACKEND=numpy`` asks for the fallback.  Both variants
stay importable side by side (the numba ones only when numba is installed)
so the test-suite and ``benchmarks/bench_kernels.py`` can compare them.

Conventions shared by the Grassmann kernels: a monomial is a ``uint64``
bitmask (bit ``i`` set means generator ``i`` is present, factors in
ascending order); a sparse element is a pair ``(keys, coefs)`` with
``keys`` of shape ``(n,)`` and ``coefs`` complex of shape ``(n, B)``, where
``B`` is the batch width (1 for plain scalars).
"""

from __future__ import annotations

import math
import os

import numpy as np

__all__ = [
    "BACKEND",
    "HAVE_NUMBA",
    "combine_terms",
    "mul_terms",
    "integrate_terms",
    "gamma_lanczos",
    "hyp2f1_series",
    "legendre_rule",
]

_requested = os.environ.get("SUPERBETA_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ValueError(f"SUPERBETA_BACKEND must be 'numba' or 'numpy', got {_requested!r}")

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

BACKEND = "numba" if (HAVE_NUMBA and _requested == "numba") else "numpy"

_U0 = np.uint64(0)
_U1 = np.uint64(1)

# Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
LANCZOS_G = 607.0 / 128.0
LANCZOS_COEFFS = np.array([
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
])
_SQRT_2PI = math.sqrt(2.0 * math.pi)


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------

def combine_terms_np(keys, coefs, tol):
    """Sort by monomial, sum duplicates, drop rows whose max modulus <= tol."""
    if keys.size == 0:
        return keys.copy(), coefs.copy()
    uk, inv = np.unique(keys, return_inverse=True)
    out = np.zeros((uk.size, coefs.shape[1]), dtype=np.complex128)
    np.add.at(out, inv, coefs)
    keep = np.abs(out).max(axis=1) > tol
    return uk[keep], out[keep]


def _swap_parity_np(a, b):
    """Parity of #{(i, j): i in a, j in b, i > j} for arrays of masks."""
    parity = np.zeros(a.shape, dtype=np.uint64)
    if a.size == 0:
        return parity
    top = int(np.max(a)).bit_length()
    for i in range(top):
        has_i = (a >> np.uint64(i)) & _U1
        below = b & np.uint64((1 << i) - 1)
        parity ^= has_i * (np.bitwise_count(below).astype(np.uint64) & _U1)
    return parity


def mul_terms_np(ka, ca, kb, cb, tol):
    ia, ib = np.nonzero((ka[:, None] & kb[None, :]) == 0)
    a = ka[ia]
    b = kb[ib]
    sign = 1.0 - 2.0 * _swap_parity_np(a, b).astype(np.float64)
    coefs = sign[:, None] * ca[ia] * cb[ib]
    return combine_terms_np(a | b, coefs, tol)


def integrate_terms_np(keys, coefs, gen):
    bit = np.uint64(1) << np.uint64(gen)
    sel = (keys & bit) != 0
    k = keys[sel]
    above = k & ~(bit | (bit - _U1))
    sign = 1.0 - 2.0 * (np.bitwise_count(above) & 1).astype(np.float64)
    return k ^ bit, coefs[sel] * sign[:, None]


def _sincospi_np(x):
    r = x - 2.0 * np.floor(x / 2.0 + 0.5)
    hi = r > 0.5
    lo = r < -0.5
    d = np.where(hi, 1.0 - r, np.where(lo, 1.0 + r, r))
    s = np.sin(np.pi * d)
    c = np.cos(np.pi * d)
    s = np.where(lo, -s, s)
    c = np.where(hi | lo, -c, c)
    return s, c


def _lanczos_np(z):
    zm = z - 1.0
    acc = np.full(z.shape, LANCZOS_COEFFS[0], dtype=np.complex128)
    for k in range(1, LANCZOS_COEFFS.size):
        acc = acc + LANCZOS_COEFFS[k] / (zm + k)
    t = zm + LANCZOS_G + 0.5
    return _SQRT_2PI * np.exp((zm + 0.5) * np.log(t) - t) * acc


def gamma_lanczos_np(z):
    """Gamma on a complex array with no poles in it."""
    z = np.asarray(z, dtype=np.complex128)
    left = z.real < 0.5
    out = np.empty_like(z)
    out[~left] = _lanczos_np(z[~left])
    if left.any():
        zl = z[left]
        s, c = _sincospi_np(zl.real)
        py = np.pi * zl.imag
        sin_pz = s * np.cosh(py) + 1j * c * np.sinh(py)
        out[left] = np.pi / (sin_pz * _lanczos_np(1.0 - zl))
    return out


def hyp2f1_series_np(a, b, c, z, max_terms, rtol):
    """Partial sums of sum_n (a)_n (b)_n / ((c)_n n!) z^n for an array of z.

    Stops per entry once three consecutive terms satisfy
    ``|term| <= rtol * |partial sum|``.  Returns ``(values, converged)``.
    """
    z = np.asarray(z, dtype=np.complex128)
    total = np.ones(z.shape, dtype=np.complex128)
    term = np.ones(z.shape, dtype=np.complex128)
    small = np.zeros(z.shape, dtype=np.int64)
    done = np.zeros(z.shape, dtype=bool)
    for n in range(max_terms):
        active = ~done
        if not active.any():
            break
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0))
        term = np.where(active, term * ratio * z, term)
        total = np.where(active, total + term, total)
        is_small = np.abs(term) <= rtol * np.abs(total)
        small = np.where(active, np.where(is_small, small + 1, 0), small)
        done |= small >= 3
    return total, done


def legendre_rule_np(n):
    """Gauss-Legendre nodes/weights on [-1, 1] by Newton on the recurrence."""
    m = (n + 1) // 2
    i = np.arange(1, m + 1)
    x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
    for _ in range(100):
        p0 = np.ones_like(x)
        p1 = x.copy()
        for k in range(2, n + 1):
            p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
        if n == 1:
            p0, p1 = np.ones_like(x), x
        dp = n * (x * p1 - p0) / (x * x - 1.0)
        dx = p1 / dp
        x = x - dx
        if np.max(np.abs(dx)) < 1e-16:
            break
    p0 = np.ones_like(x)
    p1 = x.copy()
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    if n == 1:
        p0 = np.ones_like(x)
    dp = n * (x * p1 - p0) / (x * x - 1.0)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    nodes = np.concatenate([-x, x[: n - m][::-1]])
    weights = np.concatenate([w, w[: n - m][::-1]])
    return nodes, weights


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

if HAVE_NUMBA:
    _jit = numba.njit(cache=True)

    @_jit
    def _popcount_nb(x):
        c = 0
        while x != _U0:
            x &= x - _U1
            c += 1
        return c

    @_jit
    def _swap_parity_nb(a, b):
        p = 0
        x = a
        while x != _U0:
            low = x & (~x + _U1)
            p ^= _popcount_nb(b & (low - _U1)) & 1
            x ^= low
        return p

    @_jit
    def combine_terms_nb(keys, coefs, tol):
        n = keys.shape[0]
        width = coefs.shape[1]
        order = np.argsort(keys, kind="mergesort")
        out_k = np.empty(n, dtype=np.uint64)
        out_c = np.zeros((n, width), dtype=np.complex128)
        m = 0
        i = 0
        while i < n:
            k = keys[order[i]]
            j = i
            while j < n and keys[order[j]] == k:
                for t in range(width):
                    out_c[m, t] += coefs[order[j], t]
                j += 1
            big = 0.0
            for t in range(width):
                v = abs(out_c[m, t])
                if v > big:
                    big = v
            if big > tol:
                out_k[m] = k
                m += 1
            else:
                for t in range(width):
                    out_c[m, t] = 0.0
            i = j
        return out_k[:m].copy(), out_c[:m].copy()

    @_jit
    def mul_terms_nb(ka, ca, kb, cb, tol):
        na = ka.shape[0]
        nb = kb.shape[0]
        wa = ca.shape[1]
        wb = cb.shape[1]
        width = max(wa, wb)
        keys = np.empty(na * nb, dtype=np.uint64)
        coefs = np.empty((na * nb, width), dtype=np.complex128)
        m = 0
        for i in range(na):
            a = ka[i]
            for j in range(nb):
                b = kb[j]
                if (a & b) != _U0:
                    continue
                s = 1.0 - 2.0 * _swap_parity_nb(a, b)
                keys[m] = a | b
                for t in range(width):
                    coefs[m, t] = s * ca[i, t if wa > 1 else 0] * cb[j, t if wb > 1 else 0]
                m += 1
        return combine_terms_nb(keys[:m], coefs[:m], tol)

    @_jit
    def integrate_terms_nb(keys, coefs, gen):
        bit = _U1 << np.uint64(gen)
        high = ~(bit | (bit - _U1))
        n = keys.shape[0]
        out_k = np.empty(n, dtype=np.uint64)
        out_c = np.empty((n, coefs.shape[1]), dtype=np.complex128)
        m = 0
        for i in range(n):
            k = keys[i]
            if (k & bit) == _U0:
                continue
            s = 1.0 - 2.0 * (_popcount_nb(k & high) & 1)
            out_k[m] = k ^ bit
            for t in range(coefs.shape[1]):
                out_c[m, t] = s * coefs[i, t]
            m += 1
        return out_k[:m].copy(), out_c[:m].copy()

    @_jit
    def _sincospi_nb(x):
        r = x - 2.0 * math.floor(x / 2.0 + 0.5)
        if r > 0.5:
            d = 1.0 - r
            return math.sin(math.pi * d), -math.cos(math.pi * d)
        if r < -0.5:
            d = 1.0 + r
            return -math.sin(math.pi * d), -math.cos(math.pi * d)
        return math.sin(math.pi * r), math.cos(math.pi * r)

    @_jit
    def _lanczos_nb(z, coeffs):
        zm = z - 1.0
        acc = complex(coeffs[0])
        for k in range(1, coeffs.shape[0]):
            acc += coeffs[k] / (zm + k)
        t = zm + LANCZOS_G + 0.5
        return _SQRT_2PI * np.exp((zm + 0.5) * np.log(t) - t) * acc

    @_jit
    def _gamma_lanczos_nb(z, coeffs):
        out = np.empty(z.shape[0], dtype=np.complex128)
        for i in range(z.shape[0]):
            zi = z[i]
            if zi.real < 0.5:
                s, c = _sincospi_nb(zi.real)
                py = math.pi * zi.imag
                sin_pz = complex(s * math.cosh(py), c * math.sinh(py))
                out[i] = math.pi / (sin_pz * _lanczos_nb(1.0 - zi, coeffs))
            else:
                out[i] = _lanczos_nb(zi, coeffs)
        return out

    def gamma_lanczos_nb(z):
        z = np.asarray(z, dtype=np.complex128)
        flat = np.ascontiguousarray(z.reshape(-1))
        return _gamma_lanczos_nb(flat, LANCZOS_COEFFS).reshape(z.shape)

    @_jit
    def _hyp2f1_series_nb(a, b, c, z, max_terms, rtol):
        n_z = z.shape[0]
        total = np.ones(n_z, dtype=np.complex128)
        done = np.zeros(n_z, dtype=np.bool_)
        for i in range(n_z):
            term = 1.0 + 0.0j
            acc = 1.0 + 0.0j
            small = 0
            for n in range(max_terms):
                term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0))) * z[i]
                acc += term
                if abs(term) <= rtol * abs(acc):
                    small += 1
                    if small >= 3:
                        done[i] = True
                        break
                else:
                    small = 0
            total[i] = acc
        return total, done

    def hyp2f1_series_nb(a, b, c, z, max_terms, rtol):
        z = np.asarray(z, dtype=np.complex128)
        flat = np.ascontiguousarray(z.reshape(-1))
        vals, done = _hyp2f1_series_nb(complex(a), complex(b), complex(c), flat, int(max_terms), float(rtol))
        return vals.reshape(z.shape), done.reshape(z.shape)

    @_jit
    def legendre_rule_nb(n):
        m = (n + 1) // 2
        nodes = np.empty(n)
        weights = np.empty(n)
        for i in range(m):
            x = math.cos(math.pi * (i + 0.75) / (n + 0.5))
            dp = 1.0
            for _ in range(100):
                p0 = 1.0
                p1 = x
                for k in range(2, n + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                if n == 1:
                    p0 = 1.0
                dp = n * (x * p1 - p0) / (x * x - 1.0)
                dx = p1 / dp
                x -= dx
                if abs(dx) < 1e-16:
                    break
            p0 = 1.0
            p1 = x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            if n == 1:
                p0 = 1.0
            dp = n * (x * p1 - p0) / (x * x - 1.0)
            w = 2.0 / ((1.0 - x * x) * dp * dp)
            nodes[i] = -x
            weights[i] = w
            nodes[n - 1 - i] = x
            weights[n - 1 - i] = w
        return nodes, weights


if BACKEND == "numba":
    combine_terms = combine_terms_nb
    mul_terms = mul_terms_nb
    integrate_terms = integrate_terms_nb
    gamma_lanczos = gamma_lanczos_nb
    hyp2f1_series = hyp2f1_series_nb
    legendre_rule = legendre_rule_nb
else:
    combine_terms = combine_terms_np
    mul_terms = mul_terms_np
    integrate_terms = integrate_terms_np
    gamma_lanczos = gamma_lanczos_np
    hyp2f1_series = hyp2f1_series_np
    legendre_rule = legendre_rule_np
