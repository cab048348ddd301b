"""
Series coefficients
===================

x/(e^x - 1), (x/2)coth(x/2), coth, cot, tanh and tan all expand with
Bernoulli-number coefficients.

"""

import math
from fractions import Fraction

from bernoulli import FunctionTag, evaluate_truncated, fixed_from_rational, series_coefficients

for tag in FunctionTag:
    terms = ", ".join(f"x^{m}: {c}" for m, c in series_coefficients(tag, 7))
    print(f"{tag.value:>12}  {terms}")

# Partial sums converge inside the radius of convergence.
x = fixed_from_rational(Fraction(1, 2), 64)
for order in (3, 7, 15, 31):
    print(order, evaluate_truncated(FunctionTag.TAN, x, order).to_decimal(12), math.tan(0.5))
