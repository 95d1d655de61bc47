"""
Signed fixed-point arithmetic in Q(g.f) notation.

``g`` counts integer bits including the sign, ``f`` counts fractional bits, so
a value is stored as a two's-complement mantissa of ``g + f`` bits and read as
``raw * 2**-f``.  Every operation rounds half-to-even and saturates; nothing
ever wraps.

Two layers live here:

* scalar ``Fx`` / ``FixedComplex`` values built on Python ints (exact for any
  width up to 64 bits), and
* ``round_shift`` / ``saturate`` helpers that operate on numpy mantissa arrays
  so a whole bank of butterflies can be evaluated at once.  Both layers share
  the same rounding rule and are cross-checked bit-for-bit in the tests.

Example:
    >>> a = fx_quantize(0.75, Q1_15)
    >>> fx_add(a, a).raw
    32767
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class FormatMismatchError(ValueError):
    """Operands carry different fixed-point formats."""


@dataclass(frozen=True)
class FxFormat:
    """Q(int_bits.frac_bits) signed fixed-point format."""

    int_bits: int
    frac_bits: int

    def __post_init__(self) -> None:
        if self.int_bits < 1:
            raise ValueError("int_bits must be >= 1 (the sign bit counts)")
        if self.frac_bits < 1:
            raise ValueError("frac_bits must be >= 1")
        if self.int_bits + self.frac_bits > 64:
            raise ValueError("int_bits + frac_bits must not exceed 64")

    @property
    def total_bits(self) -> int:
        return self.int_bits + self.frac_bits

    @property
    def raw_max(self) -> int:
        return (1 << (self.total_bits - 1)) - 1

    @property
    def raw_min(self) -> int:
        return -(1 << (self.total_bits - 1))

    @property
    def ulp(self) -> float:
        return 2.0 ** -self.frac_bits

    @property
    def max_value(self) -> float:
        return self.raw_max * self.ulp

    @property
    def min_value(self) -> float:
        return self.raw_min * self.ulp

    def array_dtype(self) -> type | np.dtype:
        """Dtype that holds full-precision products of two mantissas.

        Products need ``2 * total_bits`` bits; beyond int64 we fall back to
        Python ints inside object arrays.
        """
        if 2 * self.total_bits <= 62:
            return np.dtype(np.int64)
        return object

    def __str__(self) -> str:
        return f"Q{self.int_bits}.{self.frac_bits}"


Q1_15 = FxFormat(1, 15)


def internal_format(n: int, frac_bits: int = 15) -> FxFormat:
    """Default register format for an ``n``-point transform.

    With ``|re|, |im| <= 1`` inputs every intermediate component stays below
    ``sqrt(2) * n`` in magnitude, so ``ceil(log2 n)`` magnitude bits, one
    headroom bit and the sign bit cannot overflow.  The DC bin of an all-ones
    frame (exactly ``n``) is representable.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return FxFormat(math.ceil(math.log2(n)) + 2, frac_bits)


def round_shift(x, shift: int):
    """Arithmetic right shift by ``shift`` bits, rounding half to even.

    Works on Python ints and on integer / object numpy arrays.
    """
    if shift <= 0:
        return x << -shift if shift else x
    half = 1 << (shift - 1)
    q = x >> shift
    r = x - (q << shift)
    if isinstance(x, np.ndarray):
        up = (r > half) | ((r == half) & ((q & 1) == 1))
        return q + up.astype(q.dtype)
    if r > half or (r == half and q & 1):
        q += 1
    return q


def saturate(x, fmt: FxFormat):
    """Clamp mantissa(s) into the representable range of ``fmt``."""
    if isinstance(x, np.ndarray):
        return np.minimum(np.maximum(x, fmt.raw_min), fmt.raw_max)
    return min(max(x, fmt.raw_min), fmt.raw_max)


@dataclass(frozen=True, slots=True)
class Fx:
    """Fixed-point scalar: ``raw * 2**-format.frac_bits``.

    ``saturated`` records whether the value was clamped when produced; it is
    metadata only and does not take part in equality.
    """

    raw: int
    format: FxFormat
    saturated: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        if not self.format.raw_min <= self.raw <= self.format.raw_max:
            raise ValueError(f"mantissa {self.raw} does not fit {self.format}")

    def __float__(self) -> float:
        return self.raw * self.format.ulp

    @property
    def value(self) -> float:
        return float(self)


def _clamped(raw: int, fmt: FxFormat) -> Fx:
    clamped = saturate(raw, fmt)
    return Fx(clamped, fmt, clamped != raw)


def _check(a: Fx, b: Fx) -> FxFormat:
    if a.format != b.format:
        raise FormatMismatchError(f"{a.format} vs {b.format}")
    return a.format


def fx_quantize(value: float, fmt: FxFormat) -> Fx:
    """Nearest representable value (ties to even mantissa), saturating."""
    value = float(value)
    if math.isnan(value):
        raise ValueError("cannot quantize NaN")
    if math.isinf(value):
        raw = fmt.raw_max if value > 0 else fmt.raw_min
        return Fx(raw, fmt, True)
    # scaling by a power of two is exact in binary floating point
    scaled = math.ldexp(value, fmt.frac_bits)
    if scaled >= fmt.raw_max + 1:
        return Fx(fmt.raw_max, fmt, True)
    if scaled <= fmt.raw_min - 1:
        return Fx(fmt.raw_min, fmt, True)
    return _clamped(round(scaled), fmt)


def fx_resize(a: Fx, fmt: FxFormat) -> Fx:
    """Re-express ``a`` in another format (exact when widening)."""
    if a.format == fmt:
        return a
    return _clamped(round_shift(a.raw, a.format.frac_bits - fmt.frac_bits), fmt)


def fx_add(a: Fx, b: Fx) -> Fx:
    fmt = _check(a, b)
    return _clamped(a.raw + b.raw, fmt)


def fx_sub(a: Fx, b: Fx) -> Fx:
    fmt = _check(a, b)
    return _clamped(a.raw - b.raw, fmt)


def fx_mul(a: Fx, b: Fx) -> Fx:
    """Full-precision product rounded back to ``f`` fractional bits."""
    fmt = _check(a, b)
    return _clamped(round_shift(a.raw * b.raw, fmt.frac_bits), fmt)


@dataclass(frozen=True, slots=True)
class FixedComplex:
    re: Fx
    im: Fx

    def __post_init__(self) -> None:
        if self.re.format != self.im.format:
            raise FormatMismatchError("real and imaginary parts differ in format")

    @property
    def format(self) -> FxFormat:
        return self.re.format

    @property
    def raw(self) -> tuple[int, int]:
        return self.re.raw, self.im.raw

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    @classmethod
    def from_complex(cls, z: complex, fmt: FxFormat) -> FixedComplex:
        z = complex(z)
        return cls(fx_quantize(z.real, fmt), fx_quantize(z.imag, fmt))

    @classmethod
    def from_raw(cls, re: int, im: int, fmt: FxFormat) -> FixedComplex:
        return cls(Fx(int(re), fmt), Fx(int(im), fmt))

    def resize(self, fmt: FxFormat) -> FixedComplex:
        return FixedComplex(fx_resize(self.re, fmt), fx_resize(self.im, fmt))


def cadd(a: FixedComplex, b: FixedComplex) -> FixedComplex:
    return FixedComplex(fx_add(a.re, b.re), fx_add(a.im, b.im))


def csub(a: FixedComplex, b: FixedComplex) -> FixedComplex:
    return FixedComplex(fx_sub(a.re, b.re), fx_sub(a.im, b.im))


def cmul(a: FixedComplex, b: FixedComplex) -> FixedComplex:
    """Four rounded real products combined with saturating add/sub."""
    re = fx_sub(fx_mul(a.re, b.re), fx_mul(a.im, b.im))
    im = fx_add(fx_mul(a.re, b.im), fx_mul(a.im, b.re))
    return FixedComplex(re, im)


def quantize_array(values, fmt: FxFormat) -> tuple[np.ndarray, np.ndarray]:
    """Quantize complex values into (re, im) mantissa arrays."""
    z = np.asarray(values, dtype=complex).ravel()
    re = [fx_quantize(v, fmt).raw for v in z.real]
    im = [fx_quantize(v, fmt).raw for v in z.imag]
    dtype = fmt.array_dtype()
    return np.array(re, dtype=dtype), np.array(im, dtype=dtype)
