"""Compare the numba kernels against their pure-numpy fallbacks.

Run with ``python3 benchmarks/bench_kernels.py [--repeat R]``.  The first
numba call of each kernel is made before timing so compilation is excluded.
"""

import argparse
import timeit

import numpy as np

from superbeta import _kernels as K


def _dense_element(rng, dim, batch):
    keys = np.arange(1 << dim, dtype=np.uint64)
    coefs = rng.normal(size=(keys.size, batch)) + 1j * rng.normal(size=(keys.size, batch))
    return keys, coefs


def cases(rng):
    ka, ca = _dense_element(rng, 6, 64)
    kb, cb = _dense_element(rng, 6, 64)
    z = rng.uniform(-10, 10, 4096) + 1j * rng.uniform(-10, 10, 4096)
    zs = rng.uniform(-0.85, 0.85, 512).astype(np.complex128)
    return {
        "mul_terms (2^6 x 2^6 terms, batch 64)": ("mul_terms", (ka, ca, kb, cb, 1e-14)),
        "integrate_terms (2^6 terms, batch 64)": ("integrate_terms", (ka, ca, 3)),
        "gamma_lanczos (4096 points)": ("gamma_lanczos", (z,)),
        "hyp2f1_series (512 points)": ("hyp2f1_series", (0.3 + 0j, 1.7 + 0j, 2.9 + 0j, zs, 10_000, 1e-16)),
        "legendre_rule (N=1024)": ("legendre_rule", (1024,)),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    if not K.HAVE_NUMBA:
        print("numba is not importable; only the numpy backend exists")
        return
    rng = np.random.default_rng(0)
    print(f"{'kernel':42s} {'numpy [ms]':>12s} {'numba [ms]':>12s} {'speedup':>8s}")
    for label, (name, call_args) in cases(rng).items():
        f_np = getattr(K, name + "_np")
        f_nb = getattr(K, name + "_nb")
        f_nb(*call_args)  # compile
        t_np = min(timeit.repeat(lambda: f_np(*call_args), number=1, repeat=args.repeat)) * 1e3
        t_nb = min(timeit.repeat(lambda: f_nb(*call_args), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:42s} {t_np:12.3f} {t_nb:12.3f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
