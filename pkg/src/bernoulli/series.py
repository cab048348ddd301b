"""
Taylor (and Laurent, for cot/coth) coefficients that come straight out of
the Bernoulli numbers.  Each coefficient is the plain multiplier of x^m,
with the powers of two from the (2x)^(2n-1) forms already folded in.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .engine import bernoulli_recurrence
from .numeric import FixedReal, factorial, fixed_from_rational
from .zeta import pi_fixed

__all__ = ["FunctionTag", "evaluate_truncated", "expansion_coeff", "series_coefficients"]


class FunctionTag(enum.Enum):
    EXP_GEN = "exp_gen"  # x / (e^x - 1)
    X_COTH_HALF = "x_coth_half"  # (x/2) coth(x/2)
    COTH = "coth"
    COT = "cot"
    TANH = "tanh"
    TAN = "tan"

    @classmethod
    def parse(cls, text: str) -> FunctionTag:
        try:
            return cls(text.lower())
        except ValueError:
            names = ", ".join(t.value for t in cls)
            raise ValueError(f"unknown function {text!r}; expected one of {names}") from None


_LAURENT = (FunctionTag.COT, FunctionTag.COTH)
_ODD = (FunctionTag.TAN, FunctionTag.TANH)


def _min_order(tag):
    return -1 if tag in _LAURENT else 0


def expansion_coeff(tag: FunctionTag, m: int) -> Fraction:
    """Coefficient of x^m in the expansion named by ``tag``."""
    tag = FunctionTag(tag)
    if m < _min_order(tag):
        raise ValueError(f"order {m} is outside the expansion of {tag.value}")

    if tag is FunctionTag.EXP_GEN:
        return bernoulli_recurrence(m) / factorial(m)
    if tag is FunctionTag.X_COTH_HALF:
        if m % 2:
            return Fraction(0)
        return bernoulli_recurrence(m) / factorial(m)

    # remaining tags are odd functions: x^m with m = 2n - 1
    if m % 2 == 0:
        return Fraction(0)
    n = (m + 1) // 2
    base = 4**n * bernoulli_recurrence(2 * n) / factorial(2 * n)
    if tag is FunctionTag.COTH:
        return base
    if tag is FunctionTag.COT:
        return -base if n % 2 else base
    if tag is FunctionTag.TANH:
        return (4**n - 1) * base
    # TAN: (-1)^n (1 - 4^n) 4^n B_2n / (2n)!
    value = (1 - 4**n) * base
    return -value if n % 2 else value


def series_coefficients(tag: FunctionTag, max_order: int) -> list[tuple[int, Fraction]]:
    """(order, coefficient) for each nonzero coefficient up to ``max_order``."""
    tag = FunctionTag(tag)
    start = 1 if tag in _ODD else _min_order(tag)
    out = []
    for m in range(start, max_order + 1):
        c = expansion_coeff(tag, m)
        if c:
            out.append((m, c))
    return out


def _radius(tag, scale):
    # open interval of convergence; pi carried a few bits beyond the input
    pi = pi_fixed(max(scale, 8) + 8).to_fraction()
    if tag in _ODD:
        return pi / 2
    if tag in _LAURENT:
        return pi
    return 2 * pi


def evaluate_truncated(tag: FunctionTag, x: FixedReal, order: int) -> FixedReal:
    """Partial sum through x^order, rounded to the scale of ``x``."""
    tag = FunctionTag(tag)
    if order < 1:
        raise ValueError("order must be at least 1")
    xq = x.to_fraction()
    if abs(xq) >= _radius(tag, x.scale_bits):
        raise ValueError(f"x = {float(xq)} is outside the convergence domain of {tag.value}")
    if tag in _LAURENT and xq == 0:
        raise ValueError(f"{tag.value} has a pole at x = 0")
    total = Fraction(0)
    for m, c in series_coefficients(tag, order):
        total += c * xq**m
    return fixed_from_rational(total, x.scale_bits)
