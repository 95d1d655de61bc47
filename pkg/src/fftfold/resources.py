"""Closed-form butterfly / multiplier / adder counts and frame latency.

Traditional means the spatial cascade with ``n/2`` butterflies per stage;
folded means one bank of ``n/2`` butterflies reused across every stage.  Each
butterfly holds one complex multiplier plus one adder and one subtractor.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, TextIO

from .datapath import log2_exact

Architecture = Literal["traditional", "folded"]

RESOURCE_COLUMNS = ["n", "arch", "bu", "mult", "addsub", "rom_coeffs", "cycles",
                    "alpha_num", "alpha_den"]


@dataclass(frozen=True)
class ResourceReport:
    n: int
    architecture: Architecture
    butterfly_units: int
    multipliers: int
    adders_subtractors: int
    rom_coefficients: int
    frame_cycles: int


def _stages(n: int) -> int:
    stages = log2_exact(n)
    if stages < 1:
        raise ValueError("n must be at least 2")
    return stages


def traditional_resources(n: int) -> ResourceReport:
    """Cascade of ``log2 n`` stages; every butterfly has its own hardwired twiddle."""
    stages = _stages(n)
    bu = (n // 2) * stages
    return ResourceReport(n, "traditional", bu, bu, 2 * bu, bu, stages)


def folded_resources(n: int) -> ResourceReport:
    stages = _stages(n)
    bu = n // 2
    return ResourceReport(n, "folded", bu, bu, 2 * bu, bu * stages, stages)


def reduction_factor(n: int) -> Fraction:
    """Folded over traditional butterfly count, exactly ``1 / log2 n``."""
    return Fraction(folded_resources(n).butterfly_units, traditional_resources(n).butterfly_units)


@dataclass(frozen=True)
class ResourceRow:
    n: int
    traditional_bu: int
    folded_bu: int
    traditional_mult: int
    folded_mult: int
    traditional_addsub: int
    folded_addsub: int
    alpha: Fraction


def resource_table(ns: Iterable[int]) -> list[ResourceRow]:
    rows = []
    for n in ns:
        t, f = traditional_resources(n), folded_resources(n)
        rows.append(ResourceRow(n, t.butterfly_units, f.butterfly_units, t.multipliers,
                                f.multipliers, t.adders_subtractors, f.adders_subtractors,
                                reduction_factor(n)))
    return rows


def powers_of_two(n_min: int, n_max: int) -> list[int]:
    if n_min > n_max:
        raise ValueError(f"empty range {n_min}..{n_max}")
    log2_exact(n_min)
    log2_exact(n_max)
    out, n = [], n_min
    while n <= n_max:
        out.append(n)
        n *= 2
    return out


def write_resource_csv(ns: Iterable[int], out: TextIO) -> None:
    """Long format: one row per (n, architecture); both rows carry alpha(n)."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(RESOURCE_COLUMNS)
    for n in ns:
        alpha = reduction_factor(n)
        for r in (traditional_resources(n), folded_resources(n)):
            writer.writerow([n, r.architecture, r.butterfly_units, r.multipliers,
                             r.adders_subtractors, r.rom_coefficients, r.frame_cycles,
                             alpha.numerator, alpha.denominator])


def write_figure_series(ns: Iterable[int], out: TextIO, quantity: str) -> None:
    """Series for the multiplier or adder/subtractor comparison plots."""
    attr = {"multipliers": "multipliers", "adders": "adders_subtractors"}[quantity]
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n", "traditional", "folded"])
    for n in ns:
        writer.writerow([n, getattr(traditional_resources(n), attr),
                         getattr(folded_resources(n), attr)])
