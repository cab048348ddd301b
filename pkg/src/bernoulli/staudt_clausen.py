"""
Denominators and fractional parts of B_2k from the von Staudt-Clausen
theorem: B_2k + sum 1/p over primes with (p - 1) | 2k is an integer.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .numeric import FixedReal, is_prime, round_div

__all__ = [
    "ReconstructionError",
    "sc_denominator",
    "sc_fractional_part",
    "sc_primes",
    "reconstruct_from_approx",
]


class ReconstructionError(ArithmeticError):
    """The approximation was too coarse to pin down the exact rational."""


def _check_index(two_k):
    if not isinstance(two_k, int) or two_k < 2 or two_k % 2:
        raise ValueError(f"index must be an even integer >= 2, got {two_k!r}")


def _divisors(n):
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def sc_primes(two_k: int) -> list[int]:
    """Primes p with (p - 1) dividing two_k, increasing."""
    _check_index(two_k)
    return [d + 1 for d in _divisors(two_k) if is_prime(d + 1)]


def sc_denominator(two_k: int) -> int:
    """Reduced denominator of B_two_k."""
    return math.prod(sc_primes(two_k))


def _integer_offset(two_k):
    # sum of 1/p; B_2k + this is an integer
    return sum((Fraction(1, p) for p in sc_primes(two_k)), Fraction(0))


def sc_fractional_part(two_k: int) -> Fraction:
    """frac(B_two_k) = B - floor(B), in [0, 1)."""
    s = _integer_offset(two_k)
    # B = integer - s, so frac(B) = frac(-s)
    return -s - math.floor(-s)


def reconstruct_from_approx(two_k: int, approx: FixedReal) -> Fraction:
    """Exact B_two_k from an approximation closer than 1/(2D).

    D is the Staudt-Clausen denominator.  Raises ReconstructionError if
    the rounding margin is gone, or if the rounded numerator breaks the
    Staudt-Clausen congruence (a sure sign the approximation was poor).
    """
    _check_index(two_k)
    d = sc_denominator(two_k)
    scaled = approx.mantissa * d
    unit = 1 << approx.scale_bits
    num = round_div(scaled, unit)
    if 2 * abs(scaled - num * unit) >= unit:
        raise ReconstructionError(f"B_{two_k}: approximation sits on a rounding boundary")
    candidate = Fraction(num, d)
    if (candidate + _integer_offset(two_k)).denominator != 1:
        raise ReconstructionError(
            f"B_{two_k}: rounded value {num}/{d} fails the Staudt-Clausen congruence"
        )
    return candidate
