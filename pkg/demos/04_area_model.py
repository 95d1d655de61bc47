"""
Area model
==========

Butterfly, multiplier and adder counts for the cascade and the folded design,
and the reduction factor 1/log2(N).
"""

from fftfold.resources import resource_table

print(f"{'N':>5} {'BU trad':>8} {'BU fold':>8} {'mult trad':>10} {'mult fold':>10} "
      f"{'add trad':>9} {'add fold':>9} {'alpha':>6}")
for r in resource_table([8, 16, 32, 64, 128, 256, 512, 1024]):
    print(f"{r.n:>5} {r.traditional_bu:>8} {r.folded_bu:>8} {r.traditional_mult:>10} "
          f"{r.folded_mult:>10} {r.traditional_addsub:>9} {r.folded_addsub:>9} {str(r.alpha):>6}")
