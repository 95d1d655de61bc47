"""Stage counter of the folded processor.

The counter drives three outputs every clock: ``isl`` picks external input
(0, first stage) or the register-array feedback path (1), ``osl`` opens the
output path on the last stage, and ``sb`` carries the stage number itself.
Stages are numbered from 1; the counter wraps so frames can run back to back.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .datapath import log2_exact


@dataclass(frozen=True)
class ControlSignals:
    isl: int
    osl: int
    sb: int


@dataclass(frozen=True)
class ControlState:
    n: int
    stage: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.stage <= self.total_stages:
            raise ValueError(f"stage {self.stage} outside 1..{self.total_stages}")

    @property
    def total_stages(self) -> int:
        return log2_exact(self.n)


def control_signals(state: ControlState) -> ControlSignals:
    return ControlSignals(
        isl=0 if state.stage == 1 else 1,
        osl=1 if state.stage == state.total_stages else 0,
        sb=state.stage,
    )


def control_step(state: ControlState) -> ControlState:
    """Advance one rising edge; past the last stage the counter returns to 1."""
    return replace(state, stage=state.stage % state.total_stages + 1)


def frame_signals(n: int) -> list[ControlSignals]:
    """Signals for one whole frame, starting from a reset counter."""
    state = ControlState(n)
    out = []
    for _ in range(state.total_stages):
        out.append(control_signals(state))
        state = control_step(state)
    return out
