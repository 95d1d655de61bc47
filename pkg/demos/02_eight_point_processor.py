"""
An 8-point folded processor, clock by clock
===========================================

Four butterflies are reused for three cycles.  The trace shows the control
signals and the register array after each writeback.
"""

import io

import numpy as np

from fftfold.datapath import route_stage
from fftfold.processor import FoldedFftProcessor

proc = FoldedFftProcessor(8)
print("register format:", proc.format, "| butterfly units:", proc.butterfly_units)

for stage in range(1, 4):
    print(f"stage {stage} pairs:", [p[:2] for p in route_stage(8, stage).pairs])

x = np.array([0.5, 0.25, -0.25, 0, 0.125j, 0, 0, -0.5])
proc.load(x)
print("after load (bit-reversed):", [complex(v) for v in proc.registers])

while True:
    sig = proc.step()
    print(f"cycle {proc.cycle}: sb={sig.sb} isl={sig.isl} osl={sig.osl}")
    if sig.osl:
        break

print("output:", np.round([complex(v) for v in proc.output], 4))
print("numpy :", np.round(np.fft.fft(x), 4))

buf = io.StringIO()
proc.trace.write_csv(buf)
print(buf.getvalue())
