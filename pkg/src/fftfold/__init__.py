"""Cycle-accurate model of an area-folded radix-2 DIT FFT processor."""

from .control import ControlSignals, ControlState, control_signals, control_step
from .datapath import (
    RegisterArray,
    StageRouting,
    TwiddleRom,
    bit_reverse_permute,
    build_twiddle_rom,
    butterfly,
    route_stage,
)
from .numerics import (
    Q1_15,
    FixedComplex,
    FormatMismatchError,
    Fx,
    FxFormat,
    cadd,
    cmul,
    csub,
    fx_add,
    fx_mul,
    fx_quantize,
    fx_sub,
    internal_format,
)
from .oracle import dft_direct, fft_recursive, max_abs_error
from .processor import CycleTrace, FoldedFftProcessor, run_unfolded
from .resources import (
    ResourceReport,
    folded_resources,
    reduction_factor,
    resource_table,
    traditional_resources,
)

__version__ = "0.1.0"
