"""
Denominators for free
=====================

B_2k plus the reciprocals of the primes p with (p - 1) | 2k is an integer.
That pins down the denominator and the fractional part of B_2k without
computing it, and lets a decent floating approximation be rounded to the
exact value.

"""

from fractions import Fraction

from bernoulli import (
    fixed_from_rational,
    format_rational,
    reconstruct_from_approx,
    sc_denominator,
    sc_fractional_part,
)

print("denominator of B_16:", sc_denominator(16))
print("frac(B_16):", format_rational(sc_fractional_part(16)))

# For prime k = 3n + 1 only p = 2 and p = 3 qualify, so frac(B_2k) = 1/6.
for k in (7, 13, 19, 31, 37, 43):
    print(f"frac(B_{2 * k}) =", format_rational(sc_fractional_part(2 * k)))

# A ten-digit approximation of B_16 is already enough to recover it.
approx = fixed_from_rational(Fraction(-70921568627, 10**10), 64)
print("recovered B_16:", format_rational(reconstruct_from_approx(16, approx)))
