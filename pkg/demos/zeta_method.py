"""
Computing one large Bernoulli number directly
=============================================

B_2k = (-1)^(k-1) 2 (2k)! zeta(2k) / (2 pi)^(2k).  The asymptotic size
estimate tells us how many digits to carry, zeta(2k) needs only a handful
of terms when 2k is large, and the von Staudt-Clausen denominator snaps the
real number to the exact fraction.

"""

import math
import time

from bernoulli import (
    bernoulli_estimate,
    bernoulli_zeta,
    pi_fixed,
    plan_precision,
    sc_fractional_part,
    zeta_even,
)

print("pi    =", pi_fixed(64))
print("z(2)  =", zeta_even(2, 64))
print("z(40) =", zeta_even(40, 64))

print("estimate of B_20:", bernoulli_estimate(20).to_decimal(3))

plan = plan_precision(2000)
print(plan)

start = time.perf_counter()
b = bernoulli_zeta(2000)
elapsed = time.perf_counter() - start
digits = len(str(abs(b.numerator)))
print(f"B_2000: {digits}-digit numerator over {b.denominator}, {elapsed:.2f}s")
print("fractional part checks out:", b - math.floor(b) == sc_fractional_part(2000))
