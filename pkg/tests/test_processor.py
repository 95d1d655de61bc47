import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fftfold.datapath import bit_reverse_permute
from fftfold.numerics import FixedComplex, FxFormat, Q1_15, internal_format
from fftfold.oracle import dft_direct, max_abs_error
from fftfold.processor import FoldedFftProcessor, raw_pairs, run_unfolded


def rand(rng, n):
    return rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n)


def values(y):
    return [complex(v) for v in y]


class TestLoad:
    def test_bit_reversed_registers(self):
        proc = FoldedFftProcessor(8)
        x = [complex(i, -i) / 8 for i in range(8)]
        proc.load(x)
        assert values(proc.registers) == [x[i] for i in (0, 4, 2, 6, 1, 5, 3, 7)]

    def test_n2_unchanged(self):
        proc = FoldedFftProcessor(2)
        proc.load([0.5, -0.25j])
        assert values(proc.registers) == [0.5, -0.25j]

    def test_impulse_self_reversed(self):
        proc = FoldedFftProcessor(16)
        proc.load([1] + [0] * 15)
        assert values(proc.registers) == [1] + [0] * 15

    def test_widens_fixed_input(self):
        proc = FoldedFftProcessor(8)
        x = [FixedComplex.from_complex(0.5 - 0.25j, Q1_15)] * 8
        proc.load(x)
        assert proc.registers[0].format == internal_format(8)
        assert complex(proc.registers[0]) == 0.5 - 0.25j

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            FoldedFftProcessor(8).load([0] * 7)

    def test_reload_mid_frame_rejected(self):
        proc = FoldedFftProcessor(8)
        proc.load([0] * 8)
        proc.step()
        with pytest.raises(RuntimeError):
            proc.load([0] * 8)


class TestStep:
    def test_unloaded(self):
        with pytest.raises(RuntimeError):
            FoldedFftProcessor(4).step()

    def test_impulse_three_steps(self):
        proc = FoldedFftProcessor(8)
        proc.load([1, 0, 0, 0, 0, 0, 0, 0])
        sigs = [proc.step() for _ in range(3)]
        assert [s.osl for s in sigs] == [0, 0, 1]
        assert values(proc.registers) == [1] * 8
        assert values(proc.output) == [1] * 8
        with pytest.raises(RuntimeError):
            proc.step()

    def test_dc(self):
        y, _ = FoldedFftProcessor(8).run([1] * 8)
        assert values(y) == [8] + [0] * 7

    def test_dc_needs_headroom(self):
        # Q4.15 stops at 8 - 2**-15
        fmt = FxFormat(4, 15)
        y, _ = FoldedFftProcessor(8, fmt).run([1] * 8)
        assert y[0].re.raw == fmt.raw_max

    def test_random_n8(self):
        x = rand(np.random.default_rng(8), 8)
        y, _ = FoldedFftProcessor(8).run(x)
        assert max_abs_error(y, dft_direct(x)) <= 4 * 8 * 2 ** -15

    def test_isl_selects_input_bus(self):
        # stage 1 reads the input bus even if the register array is disturbed
        proc = FoldedFftProcessor(4)
        proc.load([1, 0, 0, 0])
        proc.registers.re[:] = 12345
        proc.step()
        assert values(proc.registers) == [1, 1, 0, 0]


class TestRun:
    def test_impulse(self):
        y, trace = FoldedFftProcessor(8).run([1, 0, 0, 0, 0, 0, 0, 0])
        assert values(y) == [1] * 8
        assert len(trace) == 3

    def test_n1024(self):
        x = rand(np.random.default_rng(1024), 1024)
        y, trace = FoldedFftProcessor(1024).run(x)
        assert max_abs_error(y, dft_direct(x)) <= 4 * 1024 * 2 ** -15
        assert len(trace) == 10

    def test_n2(self):
        a, b = 0.625 + 0.125j, -0.25 + 0.5j
        y, trace = FoldedFftProcessor(2).run([a, b])
        assert values(y) == [a + b, a - b]
        assert len(trace) == 1
        assert (trace[0].isl, trace[0].osl) == (0, 1)

    def test_trace_records(self):
        proc = FoldedFftProcessor(8)
        y, trace = proc.run(rand(np.random.default_rng(0), 8))
        assert trace.column("sb") == [1, 2, 3]
        assert trace.column("isl") == [0, 1, 1]
        assert trace.column("osl") == [0, 0, 1]
        assert trace.column("cycle") == [1, 2, 3]
        assert trace[-1].registers == tuple(raw_pairs(y))

    def test_back_to_back_frames(self):
        proc = FoldedFftProcessor(8)
        rng = np.random.default_rng(5)
        x1, x2 = rand(rng, 8), rand(rng, 8)
        y1, t1 = proc.run(x1)
        y2, t2 = proc.run(x2)
        assert t2.column("cycle") == [4, 5, 6]
        assert len(proc.trace) == 6
        assert raw_pairs(y2) == raw_pairs(FoldedFftProcessor(8).run(x2)[0])

    def test_deterministic(self):
        x = rand(np.random.default_rng(9), 32)
        _, t1 = FoldedFftProcessor(32).run(x)
        _, t2 = FoldedFftProcessor(32).run(x)
        assert t1.records == t2.records

    def test_without_trace(self):
        proc = FoldedFftProcessor(8, record_trace=False)
        y, trace = proc.run([1] * 8)
        assert proc.trace is None and len(trace) == 0

    def test_butterfly_units(self):
        assert FoldedFftProcessor(64).butterfly_units == 32

    def test_rejects_n1(self):
        with pytest.raises(ValueError):
            FoldedFftProcessor(1)

    def test_wide_format_object_path(self):
        fmt = FxFormat(10, 30)
        x = rand(np.random.default_rng(2), 16)
        y, _ = FoldedFftProcessor(16, fmt).run(x)
        assert raw_pairs(y) == raw_pairs(run_unfolded(16, fmt, x))
        assert max_abs_error(y, dft_direct(x)) < 1e-7


class TestUnfolded:
    def test_impulse(self):
        assert values(run_unfolded(8, None, [1] + [0] * 7)) == [1] * 8

    def test_n4_hand_evaluated(self):
        # Y(k) = 1 - W_4^(2k) = 1 - (-1)^k
        assert values(run_unfolded(4, None, [1, 0, -1, 0])) == [0, 2, 0, 2]

    def test_length_check(self):
        with pytest.raises(ValueError):
            run_unfolded(8, None, [0] * 4)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 8), st.integers(0, 2 ** 32 - 1))
    def test_folding_equivalence(self, log_n, seed):
        n = 1 << log_n
        x = rand(np.random.default_rng(seed), n)
        y, _ = FoldedFftProcessor(n).run(x)
        assert raw_pairs(y) == raw_pairs(run_unfolded(n, None, x))

    def test_folding_equivalence_under_saturation(self):
        fmt = FxFormat(2, 12)
        x = 4 * rand(np.random.default_rng(11), 32)
        y, _ = FoldedFftProcessor(32, fmt).run(x)
        assert any(v.re.saturated or v.im.saturated for v in run_unfolded(32, fmt, x))
        assert raw_pairs(y) == raw_pairs(run_unfolded(32, fmt, x))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 4]), st.integers(1, 6), st.integers(0, 2 ** 32 - 1))
def test_power_of_two_scaling(n, k, seed):
    # twiddles are only 1 and -j here, so no product ever rounds
    rng = np.random.default_rng(seed)
    raw = rng.integers(-(1 << (14 - k)), 1 << (14 - k), size=(n, 2)) << k
    fmt = internal_format(n)
    x = [FixedComplex.from_raw(r, i, fmt) for r, i in raw]
    xs = [FixedComplex.from_raw(r >> k, i >> k, fmt) for r, i in raw]
    y = raw_pairs(FoldedFftProcessor(n).run(x)[0])
    ys = raw_pairs(FoldedFftProcessor(n).run(xs)[0])
    assert [(r >> k, i >> k) for r, i in y] == ys
    assert all(r % (1 << k) == 0 and i % (1 << k) == 0 for r, i in y)


def test_power_of_two_scaling_n8_even_support():
    # zero odd samples keep the W_8 products' operands at zero
    rng = np.random.default_rng(4)
    fmt = internal_format(8)
    raw = rng.integers(-(1 << 10), 1 << 10, size=(8, 2)) << 3
    raw[1::2] = 0
    x = [FixedComplex.from_raw(r, i, fmt) for r, i in raw]
    xs = [FixedComplex.from_raw(r >> 3, i >> 3, fmt) for r, i in raw]
    y = raw_pairs(FoldedFftProcessor(8).run(x)[0])
    ys = raw_pairs(FoldedFftProcessor(8).run(xs)[0])
    assert [(r >> 3, i >> 3) for r, i in y] == ys


def test_load_uses_bit_reverse_permute():
    x = list(range(16))
    proc = FoldedFftProcessor(16)
    proc.load(x)
    assert [int(v.re.value) for v in proc.registers] == bit_reverse_permute(x)
