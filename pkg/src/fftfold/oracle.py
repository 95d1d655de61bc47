"""Double-precision reference transforms.

``dft_direct`` evaluates the defining sum term by term and is the ground truth
for every numerical check in the package; ``fft_recursive`` is the textbook
even/odd radix-2 split and is checked against it.  Twiddles follow
``W_N = exp(-2j*pi/N)``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .numerics import FixedComplex

# cached DFT matrices stay below ~16 MB each
_CACHE_LIMIT = 1024
_BLOCK_ROWS = 256


def as_complex_array(x) -> np.ndarray:
    """Coerce complex numbers, ``(re, im)`` pairs or ``FixedComplex`` values."""
    if isinstance(x, np.ndarray) and np.iscomplexobj(x):
        return x.astype(complex).ravel()
    items = list(x)
    if items and isinstance(items[0], FixedComplex):
        return np.array([complex(v) for v in items], dtype=complex)
    arr = np.asarray(items)
    if arr.ndim == 2 and arr.shape[1] == 2 and not np.iscomplexobj(arr):
        return arr[:, 0].astype(float) + 1j * arr[:, 1].astype(float)
    return arr.astype(complex).ravel()


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _twiddle_block(n: int, rows: np.ndarray) -> np.ndarray:
    # reduce n*k mod N in integers so the phase stays exact for large N
    exponents = np.outer(rows, np.arange(n)) % n
    return np.exp(-2j * np.pi * exponents / n)


@lru_cache(maxsize=8)
def _dft_matrix(n: int) -> np.ndarray:
    return _twiddle_block(n, np.arange(n))


def dft_direct(x) -> np.ndarray:
    """O(N^2) evaluation of ``Y(k) = sum_n x(n) W_N^(n k)``."""
    x = as_complex_array(x)
    n = x.size
    if n == 0:
        raise ValueError("empty input")
    if n <= _CACHE_LIMIT:
        return _dft_matrix(n) @ x
    out = np.empty(n, dtype=complex)
    for start in range(0, n, _BLOCK_ROWS):
        rows = np.arange(start, min(start + _BLOCK_ROWS, n))
        out[rows] = _twiddle_block(n, rows) @ x
    return out


def fft_recursive(x) -> np.ndarray:
    """Radix-2 decimation in time: ``Y(k) = E(k) + W_N^k O(k)``."""
    x = as_complex_array(x)
    n = x.size
    if not is_power_of_two(n):
        raise ValueError(f"length {n} is not a power of two")
    return _split(x)


def _split(x: np.ndarray) -> np.ndarray:
    n = x.size
    if n == 1:
        return x.copy()
    even = _split(x[0::2])
    odd = _split(x[1::2])
    w = np.exp(-2j * np.pi * np.arange(n // 2) / n)
    return np.concatenate([even + w * odd, even - w * odd])


def max_abs_error(a, b) -> float:
    """Largest componentwise deviation, ``max_k max(|dRe|, |dIm|)``."""
    a = as_complex_array(a)
    b = as_complex_array(b)
    if a.size != b.size:
        raise ValueError(f"length mismatch: {a.size} vs {b.size}")
    if a.size == 0:
        return 0.0
    d = a - b
    return float(max(np.abs(d.real).max(), np.abs(d.imag).max()))
