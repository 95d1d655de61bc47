"""Physical elements of the folded processor.

The butterfly bank, twiddle ROM, register array and routing network.  One bank
of ``n/2`` butterflies is shared by every stage; the stage bus picks the ROM
row and the pairing the routing network applies.

Pairing and twiddle assignment for stage ``m`` (``L = log2 n``):

* butterfly ``b`` takes the ``b``-th pair ``(k + j, k + j + 2**(m-1))`` with
  ``k`` stepping over groups of ``2**m`` and ``0 <= j < 2**(m-1)``;
* its twiddle is ``W_n ** ((b mod 2**(m-1)) * 2**(L-m))``.

Results are written back to the indices they were read from.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence, TextIO

import numpy as np

from .numerics import (
    FixedComplex,
    FormatMismatchError,
    FxFormat,
    cadd,
    cmul,
    csub,
    round_shift,
    saturate,
)
from .oracle import is_power_of_two


def log2_exact(n: int) -> int:
    if not is_power_of_two(n):
        raise ValueError(f"n={n} is not a power of two")
    return n.bit_length() - 1


def butterfly(a: FixedComplex, b: FixedComplex, w: FixedComplex) -> tuple[FixedComplex, FixedComplex]:
    """Return ``(a + w*b, a - w*b)`` using one complex product."""
    if not a.format == b.format == w.format:
        raise FormatMismatchError("butterfly operands must share one format")
    product = cmul(w, b)
    return cadd(a, product), csub(a, product)


def butterfly_bank(a_re, a_im, b_re, b_im, w_re, w_im, fmt: FxFormat):
    """Evaluate many butterflies at once on mantissa arrays.

    Bit-identical to calling ``butterfly`` lane by lane: every real product is
    rounded and saturated before the cross terms are combined.
    """
    f = fmt.frac_bits

    def mul(x, y):
        return saturate(round_shift(x * y, f), fmt)

    p_re = saturate(mul(w_re, b_re) - mul(w_im, b_im), fmt)
    p_im = saturate(mul(w_re, b_im) + mul(w_im, b_re), fmt)
    return (
        saturate(a_re + p_re, fmt),
        saturate(a_im + p_im, fmt),
        saturate(a_re - p_re, fmt),
        saturate(a_im - p_im, fmt),
    )


@lru_cache(maxsize=None)
def bit_reversed_indices(n: int) -> tuple[int, ...]:
    bits = log2_exact(n)
    if bits == 0:
        return (0,)
    return tuple(int(format(i, f"0{bits}b")[::-1], 2) for i in range(n))


def bit_reverse_permute(x):
    """``out[i] = x[bitrev(i)]``; keeps numpy arrays as arrays."""
    idx = bit_reversed_indices(len(x))
    if isinstance(x, np.ndarray):
        return x[list(idx)]
    return [x[i] for i in idx]


@dataclass(frozen=True)
class StageRouting:
    stage: int
    pairs: tuple[tuple[int, int, int], ...]

    @property
    def distance(self) -> int:
        return 1 << (self.stage - 1)

    @cached_property
    def top(self) -> np.ndarray:
        return np.array([p[0] for p in self.pairs], dtype=np.intp)

    @cached_property
    def bottom(self) -> np.ndarray:
        return np.array([p[1] for p in self.pairs], dtype=np.intp)

    @cached_property
    def columns(self) -> np.ndarray:
        return np.array([p[2] for p in self.pairs], dtype=np.intp)


@lru_cache(maxsize=None)
def route_stage(n: int, stage: int) -> StageRouting:
    """Pairs ``(top, bottom, twiddle_column)`` fed to the bank at ``stage``."""
    total = log2_exact(n)
    if not 1 <= stage <= total:
        raise ValueError(f"stage {stage} outside 1..{total}")
    span = 1 << stage
    half = span >> 1
    pairs = []
    for k in range(0, n, span):
        for j in range(half):
            pairs.append((k + j, k + j + half, len(pairs)))
    return StageRouting(stage, tuple(pairs))


@dataclass(frozen=True)
class TwiddleRom:
    """``log2 n`` rows of ``n/2`` coefficients, addressed by the stage bus."""

    n: int
    format: FxFormat
    re: np.ndarray  # shape (stages, n/2), raw mantissas
    im: np.ndarray

    @property
    def stages(self) -> int:
        return self.re.shape[0]

    @property
    def width(self) -> int:
        return self.re.shape[1]

    def row(self, stage: int) -> tuple[np.ndarray, np.ndarray]:
        if not 1 <= stage <= self.stages:
            raise ValueError(f"stage {stage} outside 1..{self.stages}")
        return self.re[stage - 1], self.im[stage - 1]

    def coefficient(self, stage: int, column: int) -> FixedComplex:
        re, im = self.row(stage)
        return FixedComplex.from_raw(re[column], im[column], self.format)

    def rows(self) -> list[list[FixedComplex]]:
        return [[self.coefficient(s, b) for b in range(self.width)]
                for s in range(1, self.stages + 1)]


def twiddle_exponent(n: int, stage: int, column: int) -> int:
    total = log2_exact(n)
    return (column % (1 << (stage - 1))) << (total - stage)


def build_twiddle_rom(n: int, fmt: FxFormat) -> TwiddleRom:
    total = log2_exact(n)
    if total < 1:
        raise ValueError("n must be at least 2")
    width = n // 2
    dtype = fmt.array_dtype()
    re = np.zeros((total, width), dtype=dtype)
    im = np.zeros((total, width), dtype=dtype)
    for stage in range(1, total + 1):
        for column in range(width):
            e = twiddle_exponent(n, stage, column)
            w = FixedComplex.from_complex(_unit_root(n, e), fmt)
            re[stage - 1, column], im[stage - 1, column] = w.raw
    re.flags.writeable = False
    im.flags.writeable = False
    return TwiddleRom(n, fmt, re, im)


def _unit_root(n: int, e: int) -> complex:
    # exact values on the axes keep W^0, W^(n/4), ... free of sin/cos residue
    e %= n
    if 4 * e % n == 0:
        return (1, -1j, -1, 1j)[4 * e // n]
    angle = -2.0 * math.pi * e / n
    return complex(math.cos(angle), math.sin(angle))


def write_rom_csv(rom: TwiddleRom, out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["stage", "column", "raw_re", "raw_im"])
    for stage in range(1, rom.stages + 1):
        re, im = rom.row(stage)
        for column in range(rom.width):
            writer.writerow([stage, column, int(re[column]), int(im[column])])


class RegisterArray:
    """``n`` complex slots of raw mantissas, written only at writeback."""

    def __init__(self, n: int, fmt: FxFormat):
        self.n = n
        self.format = fmt
        self.re = np.zeros(n, dtype=fmt.array_dtype())
        self.im = np.zeros(n, dtype=fmt.array_dtype())

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> FixedComplex:
        return FixedComplex.from_raw(self.re[i], self.im[i], self.format)

    def __iter__(self):
        return (self[i] for i in range(self.n))

    def load(self, re: np.ndarray, im: np.ndarray) -> None:
        if len(re) != self.n or len(im) != self.n:
            raise ValueError(f"expected {self.n} values")
        self.re = np.array(re, dtype=self.format.array_dtype())
        self.im = np.array(im, dtype=self.format.array_dtype())

    def writeback(self, index: np.ndarray, re: np.ndarray, im: np.ndarray) -> None:
        self.re[index] = re
        self.im[index] = im

    def snapshot(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(map(int, self.re), map(int, self.im)))

    def values(self) -> list[FixedComplex]:
        return list(self)


def apply_stage(re: np.ndarray, im: np.ndarray, routing: StageRouting,
                rom: TwiddleRom) -> tuple[np.ndarray, np.ndarray]:
    """One pass of the bank over ``(re, im)``; returns the in-place result."""
    top, bottom = routing.top, routing.bottom
    w_re, w_im = rom.row(routing.stage)
    cols = routing.columns
    t_re, t_im, b_re, b_im = butterfly_bank(
        re[top], im[top], re[bottom], im[bottom], w_re[cols], w_im[cols], rom.format)
    out_re, out_im = re.copy(), im.copy()
    out_re[top], out_im[top] = t_re, t_im
    out_re[bottom], out_im[bottom] = b_re, b_im
    return out_re, out_im


def as_fixed_vector(x: Sequence, fmt: FxFormat) -> list[FixedComplex]:
    """Complex numbers are quantized into ``fmt``; ``FixedComplex`` is resized."""
    return [v.resize(fmt) if isinstance(v, FixedComplex) else FixedComplex.from_complex(v, fmt)
            for v in x]
