"""
Direct computation of a single B_2k from zeta(2k).

    B_2k = (-1)^(k-1) * 2 * (2k)! * zeta(2k) / (2 pi)^(2k)

evaluated in binary fixed point at a precision chosen from the asymptotic
size of B_2k, then snapped to the exact rational with the Staudt-Clausen
denominator.  No other Bernoulli number is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numeric import FixedReal, factorial, round_div
from .staudt_clausen import reconstruct_from_approx, sc_denominator

__all__ = [
    "GUARD_BITS",
    "PrecisionPlan",
    "bernoulli_estimate",
    "bernoulli_zeta",
    "e_fixed",
    "pi_fixed",
    "plan_precision",
    "zeta_even",
]

GUARD_BITS = 32
ESTIMATE_SCALE = 64

_LOG2_10 = math.log2(10)


def _check_even(two_k):
    if not isinstance(two_k, int) or two_k < 2 or two_k % 2:
        raise ValueError(f"index must be an even integer >= 2, got {two_k!r}")


def _extra_bits(scale_bits):
    return 16 + scale_bits.bit_length()


def _arctan_inv(x, bits):
    # arctan(1/x) * 2**bits, each term floored; error < number of terms
    power = (1 << bits) // x
    x2 = x * x
    total = power
    n = 1
    sign = -1
    while power:
        power //= x2
        n += 2
        total += sign * (power // n)
        sign = -sign
    return total


def pi_fixed(scale_bits: int) -> FixedReal:
    """pi to within 2**-(scale_bits - 2), via Machin's formula."""
    if scale_bits < 8:
        raise ValueError("scale_bits must be at least 8")
    w = scale_bits + _extra_bits(scale_bits)
    raw = 16 * _arctan_inv(5, w) - 4 * _arctan_inv(239, w)
    return FixedReal(raw, w).rescale(scale_bits)


def e_fixed(scale_bits: int) -> FixedReal:
    """Euler's number from sum 1/n!."""
    w = scale_bits + _extra_bits(scale_bits)
    term = 1 << w
    total = 0
    n = 0
    while term:
        total += term
        n += 1
        term //= n
    return FixedReal(total, w).rescale(scale_bits)


def _direct_terms_needed(s, bits):
    """Smallest N whose tail bound N^(1-s)/(s-1) is below 2**-bits, or None if huge."""
    # solve (s-1) log2 N + log2(s-1) >= bits
    log_n = (bits - math.log2(s - 1)) / (s - 1)
    if log_n > 20:
        return None
    n = max(1, math.ceil(2**log_n))
    while n > 1 and (s - 1) * math.log2(n - 1) + math.log2(s - 1) >= bits:
        n -= 1
    while (s - 1) * math.log2(n) + math.log2(s - 1) < bits:
        n += 1
    return n


def _zeta_direct(s, n_terms, w):
    # sum_{n=1}^{N} n^-s; the tail past N is dropped (bounded by the caller)
    one = 1 << w
    total = 0
    for n in range(1, n_terms + 1):
        term = one // n**s
        if not term:
            break
        total += term
    return total


def _zeta_alternating(s, w):
    """zeta(s) * 2**w from the Borwein-accelerated alternating series.

    eta(s) = -1/d_n sum_{k<n} (-1)^k (d_k - d_n) / (k+1)^s with error below
    3 / (3 + sqrt 8)^n for real s >= 1, and zeta = eta / (1 - 2^(1-s)).
    """
    n = math.ceil((w + 4) / math.log2(3 + math.sqrt(8))) + 1
    d = []
    acc = 0
    for i in range(n + 1):
        acc += n * factorial(n + i - 1) * 4**i // (factorial(n - i) * factorial(2 * i))
        d.append(acc)
    dn = d[n]
    one = 1 << w
    total = 0
    for k in range(n):
        term = (d[k] - dn) * (one // (k + 1) ** s)
        total += -term if k & 1 else term
    eta = round_div(-total, dn)
    # zeta = eta * 2^(s-1) / (2^(s-1) - 1)
    return round_div(eta << (s - 1), (1 << (s - 1)) - 1)


def zeta_even(two_k: int, scale_bits: int) -> FixedReal:
    """zeta(two_k) to within 2**-(scale_bits - 2).

    Sums n^-2k directly when the tail bound says few terms are needed (the
    large-index case the direct method is for).  Small arguments at high
    precision would need astronomically many terms, so those go through an
    accelerated alternating series instead.
    """
    _check_even(two_k)
    if scale_bits < 0:
        raise ValueError("scale_bits must be non-negative")
    w = scale_bits + _extra_bits(scale_bits)
    n_terms = _direct_terms_needed(two_k, scale_bits + 2)
    alt_terms = (w + 4) / math.log2(3 + math.sqrt(8))
    if n_terms is not None and n_terms <= max(64, 4 * alt_terms):
        raw = _zeta_direct(two_k, n_terms, w)
    else:
        raw = _zeta_alternating(two_k, w)
    return FixedReal(raw, w).rescale(scale_bits)


def bernoulli_estimate(two_k: int) -> FixedReal:
    """Asymptotic B_2k ~ (-1)^(k-1) 4 (k / (pi e))^(2k) sqrt(pi k), at 64 bits."""
    _check_even(two_k)
    k = two_k // 2
    s = ESTIMATE_SCALE
    pi = pi_fixed(s)
    # for k < pi*e the ratio is below 1 but the power never drops under
    # 1e-3, so 64 bits keep plenty of relative precision
    ratio = FixedReal.from_int(k, s) / (pi * e_fixed(s))
    value = ratio**two_k
    value = 4 * value * (pi * k).sqrt()
    return value if k % 2 else -value


@dataclass(frozen=True)
class PrecisionPlan:
    two_k: int
    estimated_decimal_digits: int
    working_scale_bits: int
    guard_bits: int


def _log10_abs(x: FixedReal) -> float:
    return math.log10(abs(x.mantissa)) - x.scale_bits * math.log10(2)


def plan_precision(two_k: int, guard_bits: int = GUARD_BITS) -> PrecisionPlan:
    """Digit budget for the numerator of B_2k, and the bits to carry it."""
    _check_even(two_k)
    if guard_bits < 0:
        raise ValueError("guard_bits must be non-negative")
    est = bernoulli_estimate(two_k)
    digits = math.ceil(_log10_abs(est)) + math.ceil(math.log10(sc_denominator(two_k))) + 1
    digits = max(1, digits)
    bits = math.ceil(digits * _LOG2_10) + guard_bits
    return PrecisionPlan(two_k, digits, bits, guard_bits)


def bernoulli_zeta(two_k: int, guard_bits: int = GUARD_BITS) -> Fraction:
    """Exact B_2k straight from zeta(2k); raises ReconstructionError if the
    planned precision turns out to be too small (retry with more guard bits).
    """
    plan = plan_precision(two_k, guard_bits)
    s = plan.working_scale_bits
    # (2pi)^(2k) loses about log2(2k) bits of relative accuracy
    pi_scale = s + two_k.bit_length() + 8
    two_pi = pi_fixed(pi_scale) * 2
    power = (two_pi**two_k).rescale(s)
    zeta = zeta_even(two_k, s)
    value = zeta * (2 * factorial(two_k)) / power
    if (two_k // 2) % 2 == 0:
        value = -value
    return reconstruct_from_approx(two_k, value)
