"""
Fixed-point arithmetic
======================

Every datapath element works on signed Q(g.f) mantissas with round-half-even
and saturation.  This walks through quantizing, multiplying and the complex
product a butterfly uses.
"""

import math

from fftfold.numerics import FixedComplex, FxFormat, Q1_15, cmul, fx_add, fx_mul, fx_quantize

# 1/sqrt(2) lands on mantissa 23170 in Q1.15
h = fx_quantize(1 / math.sqrt(2), Q1_15)
print("1/sqrt2 in Q1.15:", h.raw, float(h))

# the product is rounded back to 15 fractional bits
print("h*h:", fx_mul(h, h).raw, "(exact 0.5 would be 16384)")

# sums saturate instead of wrapping
s = fx_add(fx_quantize(0.75, Q1_15), fx_quantize(0.75, Q1_15))
print("0.75 + 0.75 ->", float(s), "saturated:", s.saturated)

# complex product: four rounded real products, then add/sub
q2 = FxFormat(2, 15)
w8 = FixedComplex.from_complex(complex(math.cos(-math.pi / 4), math.sin(-math.pi / 4)), q2)
print("W8 * conj(W8) =", complex(cmul(w8, FixedComplex.from_complex(complex(h.value, h.value), q2))))
