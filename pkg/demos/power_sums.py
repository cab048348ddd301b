"""
Sums of powers
==============

Faulhaber's polynomial turns sum_{k=1}^{n-1} k^r into a polynomial in n
whose coefficients are built from Bernoulli numbers.

"""

from bernoulli import power_sum_exclusive, power_sum_inclusive, power_sum_poly

for r in range(1, 6):
    print(f"sum_(k<n) k^{r} = {power_sum_poly(r)}")

# Jakob Bernoulli's party trick: the tenth powers up to 1000.
print(power_sum_inclusive(1000, 10))

# The two conventions differ only by the last term.
n, r = 10, 3
print(power_sum_inclusive(n, r) - power_sum_exclusive(n, r) == n**r)
