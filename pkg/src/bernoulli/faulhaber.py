"""
Power sums via Faulhaber's polynomial:

    sum_{k=1}^{n-1} k^r = sum_{j=0}^{r} B_j/j! * r!/(r-j+1)! * n^(r-j+1)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .engine import bernoulli_table
from .numeric import factorial, format_rational

__all__ = ["PowerSumPoly", "power_sum_exclusive", "power_sum_inclusive", "power_sum_poly"]


@dataclass(frozen=True)
class PowerSumPoly:
    """Coefficients of n^1 .. n^(r+1); ``coeffs[d - 1]`` multiplies n^d."""

    r: int
    coeffs: tuple[Fraction, ...]

    @property
    def degree(self) -> int:
        return self.r + 1

    def coefficient(self, d: int) -> Fraction:
        if 1 <= d <= self.r + 1:
            return self.coeffs[d - 1]
        return Fraction(0)

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = (acc + c) * n
        return acc

    def terms(self) -> list[str]:
        return [
            f"{format_rational(c)}·n^{d}"
            for d, c in sorted(enumerate(self.coeffs, 1), reverse=True)
            if c
        ]

    def __str__(self):
        return " + ".join(self.terms())


@lru_cache(maxsize=None)
def power_sum_poly(r: int) -> PowerSumPoly:
    if r < 0:
        raise ValueError("exponent must be non-negative")
    b = bernoulli_table(r)
    coeffs = [Fraction(0)] * (r + 1)
    for j in range(r + 1):
        coeffs[r - j] = b[j] / factorial(j) * Fraction(factorial(r), factorial(r - j + 1))
    return PowerSumPoly(r, tuple(coeffs))


@lru_cache(maxsize=None)
def _integer_form(r):
    # integer coefficients over a common denominator, for fast evaluation
    poly = power_sum_poly(r)
    den = math.lcm(*(c.denominator for c in poly.coeffs))
    return den, tuple(int(c * den) for c in poly.coeffs)


def power_sum_exclusive(n: int, r: int) -> int:
    """sum_{k=1}^{n-1} k^r, evaluated from the polynomial."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be non-negative")
    if n <= 1:
        return 0
    den, ints = _integer_form(r)
    acc = 0
    for c in reversed(ints):
        acc = (acc + c) * n
    q, rem = divmod(acc, den)
    if rem:
        raise ArithmeticError(f"power-sum polynomial for r={r} is not integral at n={n}")
    if r == 0:
        # the polynomial is just n: it counts the k = 0 term as 0^0 = 1
        q -= 1
    return q


def power_sum_inclusive(n: int, r: int) -> int:
    """sum_{k=1}^{n} k^r."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return power_sum_exclusive(n + 1, r)
