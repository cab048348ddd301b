"""
Irregular primes
================

p is regular when it divides none of the numerators of B_2, ..., B_{p-3}.
The first irregular prime is 37, because 37 divides the numerator of B_32.

"""

from bernoulli import irregular_primes_up_to, is_regular

print(is_regular(31))
print(is_regular(37))

pairs = irregular_primes_up_to(300)
print(sorted({pair.p for pair in pairs}))

# The mod-p route never builds the exact table and reaches further.
pairs_1000 = irregular_primes_up_to(1000, method="modular")
print(len({pair.p for pair in pairs_1000}), "irregular primes below 1000")
