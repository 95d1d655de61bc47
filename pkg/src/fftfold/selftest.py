"""Invariant suite behind ``fftfold selftest``.

Each check returns a ``CheckResult``; ``run_selftest`` runs them all for sizes
``2 .. max_n`` and prints one line per property.  The routing function is a
parameter so a broken router can be injected as a negative control.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .control import frame_signals
from .datapath import StageRouting, bit_reverse_permute, log2_exact, route_stage
from .oracle import dft_direct, fft_recursive, max_abs_error
from .processor import FoldedFftProcessor, raw_pairs, run_unfolded

SEED_ENV = "FFTFOLD_SEED"

Router = Callable[[int, int], StageRouting]


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def sizes(max_n: int) -> list[int]:
    log2_exact(max_n)
    return [1 << k for k in range(1, max_n.bit_length())]


def seed_from_env(default: int | None = None) -> int:
    value = os.environ.get(SEED_ENV)
    if value is not None:
        return int(value)
    if default is not None:
        return default
    return int(np.random.SeedSequence().entropy % (1 << 32))


def random_frame(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)


def check_routing_matching(ns, route: Router = route_stage) -> CheckResult:
    for n in ns:
        for stage in range(1, log2_exact(n) + 1):
            routing = route(n, stage)
            seen = [i for top, bottom, _ in routing.pairs for i in (top, bottom)]
            if len(routing.pairs) != n // 2 or sorted(seen) != list(range(n)):
                return CheckResult("routing perfect matching", False, f"n={n} stage={stage}")
            if any(bottom - top != 1 << (stage - 1) for top, bottom, _ in routing.pairs):
                return CheckResult("routing perfect matching", False,
                                   f"n={n} stage={stage}: pair distance != 2^(m-1)")
    return CheckResult("routing perfect matching", True)


def dependency_connected(n: int, route: Router = route_stage) -> bool:
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for stage in range(1, log2_exact(n) + 1):
        for top, bottom, _ in route(n, stage).pairs:
            parent[find(top)] = find(bottom)
    return len({find(i) for i in range(n)}) == 1


def check_routing_connected(ns, route: Router = route_stage) -> CheckResult:
    bad = [n for n in ns if not dependency_connected(n, route)]
    return CheckResult("dependency graph connected", not bad, f"n={bad}" if bad else "")


def check_control(ns) -> CheckResult:
    for n in ns:
        stages = log2_exact(n)
        sig = frame_signals(n)
        if ([s.isl for s in sig] != [0] + [1] * (stages - 1)
                or [s.osl for s in sig] != [0] * (stages - 1) + [1]
                or [s.sb for s in sig] != list(range(1, stages + 1))):
            return CheckResult("control protocol", False, f"n={n}")
    return CheckResult("control protocol", True)


def check_bit_reverse(ns) -> CheckResult:
    for n in ns:
        idx = list(range(n))
        if bit_reverse_permute(bit_reverse_permute(idx)) != idx:
            return CheckResult("bit reversal involution", False, f"n={n}")
    return CheckResult("bit reversal involution", True)


def check_folding_equivalence(ns, rng, frames: int) -> CheckResult:
    for n in ns:
        proc = FoldedFftProcessor(n, record_trace=False)
        for _ in range(frames):
            x = random_frame(rng, n)
            y, _ = proc.run(x)
            if raw_pairs(y) != raw_pairs(run_unfolded(n, proc.format, x)):
                return CheckResult("folding equivalence", False, f"n={n}")
    return CheckResult("folding equivalence", True)


def check_oracle_equivalence(ns, rng, frames: int) -> CheckResult:
    worst = 0.0
    for n in ns:
        proc = FoldedFftProcessor(n, record_trace=False)
        bound = 4 * n * 2.0 ** -proc.format.frac_bits
        for _ in range(frames):
            x = random_frame(rng, n)
            y, _ = proc.run(x)
            err = max_abs_error(y, dft_direct(x))
            worst = max(worst, err / bound)
            if err > bound:
                return CheckResult("oracle equivalence", False, f"n={n} error={err:.3g} > {bound:.3g}")
    return CheckResult("oracle equivalence", True, f"worst error/bound = {worst:.3f}")


def check_recursive_oracle(ns, rng) -> CheckResult:
    for n in ns:
        x = random_frame(rng, n)
        err = max_abs_error(fft_recursive(x), dft_direct(x))
        if err > 1e-9:
            return CheckResult("recursive FFT vs direct DFT", False, f"n={n} error={err:.3g}")
    return CheckResult("recursive FFT vs direct DFT", True)


def check_degenerate() -> CheckResult:
    proc = FoldedFftProcessor(2)
    a, b = 0.375 - 0.25j, -0.5 + 0.125j
    y, trace = proc.run([a, b])
    ok = ([complex(v) for v in y] == [a + b, a - b]
          and len(trace) == 1 and trace[0].isl == 0 and trace[0].osl == 1)
    for n in (2, 8, 256):
        y, _ = FoldedFftProcessor(n).run([1] + [0] * (n - 1))
        ok = ok and all(complex(v) == 1 for v in y)
    return CheckResult("degenerate cases (n=2, impulse)", ok)


def run_selftest(max_n: int = 256, seed: int | None = None, frames: int = 4,
                 route: Router = route_stage, echo: Callable[[str], None] | None = print
                 ) -> list[CheckResult]:
    seed = seed_from_env() if seed is None else seed
    rng = np.random.default_rng(seed)
    ns = sizes(max_n)
    if echo:
        echo(f"selftest n=2..{max_n} seed={seed}")
    results = [
        check_routing_matching(ns, route),
        check_routing_connected(ns, route),
        check_control(ns),
        check_bit_reverse(ns),
        check_folding_equivalence(ns, rng, frames),
        check_oracle_equivalence(ns, rng, frames),
        check_recursive_oracle(ns, rng),
        check_degenerate(),
    ]
    if echo:
        for r in results:
            echo(r.line())
    return results
