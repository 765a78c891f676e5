"""numpy helpers for mod-p arithmetic on small primes.

The float64 matmul trick is exact as long as every intermediate integer is
below 2**53: entries are < p, products < p**2, and row sums add a factor of
the inner dimension.  ``usable(p, dim)`` gates all fast paths on that bound.
"""
from __future__ import annotations

import numpy as np

_EXACT_LIMIT = 2 ** 53


def usable(p: int, dim: int) -> bool:
    return dim * (p - 1) * (p - 1) < _EXACT_LIMIT


def mat_mul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """(a @ b) % p via exact float64 matmul (BLAS) for small p."""
    c = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    return c % p


def mat_pow_mod(a: np.ndarray, e: int, p: int) -> np.ndarray:
    n = a.shape[0]
    result = np.eye(n, dtype=np.int64)
    base = a % p
    while e:
        if e & 1:
            result = mat_mul_mod(result, base, p)
        base = mat_mul_mod(base, base, p)
        e >>= 1
    return result


def tensor_from_mul(mul, p: int) -> np.ndarray:
    """Structure constants as an int64 array c[i, j, k]."""
    return np.array(mul, dtype=np.int64) % p
