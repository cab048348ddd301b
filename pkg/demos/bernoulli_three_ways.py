"""
Bernoulli numbers three ways
============================

The same exact rationals come out of three unrelated computations: the
binomial recurrence, the double sum, and the zeta-function route.

"""

from bernoulli import (
    bernoulli_double_sum,
    bernoulli_table,
    bernoulli_zeta,
    format_rational,
)

# One triangular pass gives the whole table B_0 .. B_40.
table = bernoulli_table(40)
for n in range(0, 41, 2):
    print(f"B_{n:<2} = {format_rational(table[n])}")

# B_1 = -1/2 and every odd index from 3 on vanishes.
print("B_1 =", table[1], " odd B_3..B_39 all zero:", all(table[n] == 0 for n in range(3, 41, 2)))

# The double sum needs no table at all; it is slow, but it is an
# independent derivation, so agreement is a real check.
print("double sum agrees up to 60:", all(bernoulli_double_sum(n) == bernoulli_table(60)[n] for n in range(61)))

# The zeta method jumps straight to any even index.
print("B_30 from zeta(30):", format_rational(bernoulli_zeta(30)))
