"""Cycle-stepped folded FFT processor and its unfolded twin.

``FoldedFftProcessor`` owns one bank of ``n/2`` butterflies, a register array
and a stage counter.  Each ``step`` is one clock: the counter's signals select
the data source and ROM row, the bank runs over every pair of the stage, the
results are written back in place and the counter advances.  A frame therefore
takes ``log2 n`` cycles and the output is valid on the cycle where ``osl`` is
high.

``run_unfolded`` lays the same stages out as a cascade of
``(n/2) * log2 n`` independent scalar butterflies.  It shares routing and ROM
contents with the folded machine but none of its register plumbing, so
comparing the two isolates the effect of folding.

    >>> proc = FoldedFftProcessor(8)
    >>> y, trace = proc.run([1, 0, 0, 0, 0, 0, 0, 0])
    >>> [complex(v) for v in y][:2], len(trace)
    ([(1+0j), (1+0j)], 3)
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, TextIO

import numpy as np

from .control import ControlSignals, ControlState, control_signals, control_step
from .datapath import (
    RegisterArray,
    apply_stage,
    as_fixed_vector,
    bit_reverse_permute,
    build_twiddle_rom,
    butterfly,
    log2_exact,
    route_stage,
)
from .numerics import FixedComplex, FxFormat, internal_format


@dataclass(frozen=True)
class TraceRecord:
    cycle: int
    sb: int
    isl: int
    osl: int
    registers: tuple[tuple[int, int], ...]  # raw (re, im) after writeback


@dataclass
class CycleTrace:
    records: list[TraceRecord] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, i):
        return self.records[i]

    def column(self, name: str) -> list[int]:
        return [getattr(r, name) for r in self.records]

    def write_csv(self, out: TextIO) -> None:
        """``cycle, sb, isl, osl, reg0 .. reg{n-1}``; registers as ``re:im``."""
        writer = csv.writer(out, lineterminator="\n")
        n = len(self.records[0].registers) if self.records else 0
        writer.writerow(["cycle", "sb", "isl", "osl"] + [f"reg{i}" for i in range(n)])
        for r in self.records:
            writer.writerow([r.cycle, r.sb, r.isl, r.osl]
                            + [f"{re}:{im}" for re, im in r.registers])


class FoldedFftProcessor:
    """Area-folded radix-2 DIT FFT: ``n/2`` butterflies reused ``log2 n`` times.

    Args:
        n: transform size, a power of two >= 2.
        fmt: register / ROM format; defaults to ``internal_format(n)``.
        record_trace: keep a ``TraceRecord`` per clock.
    """

    def __init__(self, n: int, fmt: FxFormat | None = None, record_trace: bool = True):
        self.stages = log2_exact(n)
        if self.stages < 1:
            raise ValueError("the folded processor needs n >= 2")
        self.n = n
        self.format = fmt or internal_format(n)
        self.rom = build_twiddle_rom(n, self.format)
        self.registers = RegisterArray(n, self.format)
        self.control = ControlState(n)
        self.trace = CycleTrace() if record_trace else None
        self.cycle = 0
        self.output: list[FixedComplex] | None = None
        self._input_bus: tuple[np.ndarray, np.ndarray] | None = None

    @property
    def butterfly_units(self) -> int:
        return self.n // 2

    @property
    def busy(self) -> bool:
        return self._input_bus is not None

    def load(self, x: Sequence) -> None:
        """Present a frame in bit-reversed order on the input bus."""
        if len(x) != self.n:
            raise ValueError(f"expected {self.n} samples, got {len(x)}")
        if self.busy or self.control.stage != 1:
            raise RuntimeError("cannot load while a frame is in flight")
        samples = bit_reverse_permute(as_fixed_vector(x, self.format))
        dtype = self.format.array_dtype()
        re = np.array([v.re.raw for v in samples], dtype=dtype)
        im = np.array([v.im.raw for v in samples], dtype=dtype)
        self._input_bus = (re, im)
        self.registers.load(re, im)
        self.output = None

    def step(self) -> ControlSignals:
        """Advance one clock cycle."""
        if not self.busy:
            raise RuntimeError("no frame loaded")
        signals = control_signals(self.control)
        if signals.isl == 0:
            src_re, src_im = self._input_bus
        else:
            src_re, src_im = self.registers.re, self.registers.im
        routing = route_stage(self.n, signals.sb)
        re, im = apply_stage(src_re, src_im, routing, self.rom)
        self.registers.writeback(slice(None), re, im)
        self.cycle += 1
        if self.trace is not None:
            self.trace.records.append(TraceRecord(
                self.cycle, signals.sb, signals.isl, signals.osl, self.registers.snapshot()))
        if signals.osl == 1:
            self.output = self.registers.values()
            self._input_bus = None
        self.control = control_step(self.control)
        return signals

    def run(self, x: Sequence) -> tuple[list[FixedComplex], CycleTrace]:
        """Load ``x`` and clock until the output path opens."""
        first = len(self.trace) if self.trace is not None else 0
        self.load(x)
        while self.step().osl == 0:
            pass
        frame = CycleTrace(self.trace.records[first:]) if self.trace is not None else CycleTrace()
        return self.output, frame


def run_unfolded(n: int, fmt: FxFormat | None, x: Sequence) -> list[FixedComplex]:
    """Spatial cascade: a fresh scalar butterfly for every (stage, pair)."""
    stages = log2_exact(n)
    if len(x) != n:
        raise ValueError(f"expected {n} samples, got {len(x)}")
    if stages < 1:
        raise ValueError("n must be at least 2")
    fmt = fmt or internal_format(n)
    rom_rows = _rom_rows(n, fmt)
    wires = bit_reverse_permute(as_fixed_vector(x, fmt))
    for stage, row in enumerate(rom_rows, start=1):
        nxt = list(wires)
        for top, bottom, column in route_stage(n, stage).pairs:
            nxt[top], nxt[bottom] = butterfly(wires[top], wires[bottom], row[column])
        wires = nxt
    return wires


@lru_cache(maxsize=16)
def _rom_rows(n: int, fmt: FxFormat) -> tuple[tuple[FixedComplex, ...], ...]:
    return tuple(tuple(row) for row in build_twiddle_rom(n, fmt).rows())


def raw_pairs(values: Sequence[FixedComplex]) -> list[tuple[int, int]]:
    return [v.raw for v in values]
