"""
Exact and fixed-point arithmetic shared by the rest of the package.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``
(always reduced, sign on the numerator).  ``FixedReal`` is a binary
fixed-point real: ``mantissa * 2**-scale_bits``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

__all__ = [
    "FixedReal",
    "binomial",
    "factorial",
    "fixed_from_rational",
    "format_rational",
    "is_prime",
    "parse_rational",
    "primes_up_to",
    "round_div",
]


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n so identity sums need no boundary cases."""
    if n < 0 or k < 0:
        raise ValueError("binomial arguments must be non-negative")
    return math.comb(n, k)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(n)


def primes_up_to(limit: int) -> list[int]:
    """All primes p <= limit, increasing (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def is_prime(n: int) -> bool:
    # deterministic trial division; callers only ask about desk-scale numbers
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def round_div(a: int, b: int) -> int:
    """a / b rounded to the nearest integer, ties to even."""
    if b == 0:
        raise ZeroDivisionError("round_div by zero")
    if b < 0:
        a, b = -a, -b
    q, r = divmod(a, b)
    twice = 2 * r
    if twice > b or (twice == b and q & 1):
        q += 1
    return q


def format_rational(q) -> str:
    """Text form ``num/den``; the denominator is dropped when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if not sep:
            return Fraction(int(num))
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


@dataclass(frozen=True)
class FixedReal:
    """Binary fixed-point number ``mantissa / 2**scale_bits``.

    Binary operations work at the larger of the two scales and round the
    result half-to-even, so each operation is off by at most half an ulp.
    """

    mantissa: int
    scale_bits: int

    def __post_init__(self):
        if self.scale_bits < 0:
            raise ValueError("scale_bits must be non-negative")

    @classmethod
    def from_int(cls, n: int, scale_bits: int) -> FixedReal:
        return cls(n << scale_bits, scale_bits)

    def rescale(self, scale_bits: int) -> FixedReal:
        shift = scale_bits - self.scale_bits
        if shift >= 0:
            return FixedReal(self.mantissa << shift, scale_bits)
        return FixedReal(round_div(self.mantissa, 1 << -shift), scale_bits)

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.scale_bits)

    def __float__(self):
        return self.mantissa / (1 << self.scale_bits)

    def _coerce(self, other):
        if isinstance(other, FixedReal):
            s = max(self.scale_bits, other.scale_bits)
            return self.rescale(s), other.rescale(s)
        if isinstance(other, int):
            return self, FixedReal.from_int(other, self.scale_bits)
        if isinstance(other, Rational):
            return self, fixed_from_rational(other, self.scale_bits)
        return None

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return FixedReal(a.mantissa + b.mantissa, a.scale_bits)

    __radd__ = __add__

    def __neg__(self):
        return FixedReal(-self.mantissa, self.scale_bits)

    def __abs__(self):
        return FixedReal(abs(self.mantissa), self.scale_bits)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return FixedReal(a.mantissa - b.mantissa, a.scale_bits)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, int):
            return FixedReal(self.mantissa * other, self.scale_bits)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        s = a.scale_bits
        return FixedReal(round_div(a.mantissa * b.mantissa, 1 << s), s)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            return FixedReal(round_div(self.mantissa, other), self.scale_bits)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if b.mantissa == 0:
            raise ZeroDivisionError("FixedReal division by zero")
        s = a.scale_bits
        return FixedReal(round_div(a.mantissa << s, b.mantissa), s)

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        b, a = pair
        return a / b

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = FixedReal.from_int(1, self.scale_bits)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def sqrt(self) -> FixedReal:
        if self.mantissa < 0:
            raise ValueError("square root of a negative FixedReal")
        # isqrt floors; one extra bit lets us round to nearest
        s = self.scale_bits
        r = math.isqrt(self.mantissa << (s + 2))
        return FixedReal((r + 1) >> 1, s)

    def __eq__(self, other):
        if isinstance(other, FixedReal):
            return self.to_fraction() == other.to_fraction()
        if isinstance(other, Rational):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, FixedReal):
            other = other.to_fraction()
        return self.to_fraction() < other

    def __le__(self, other):
        if isinstance(other, FixedReal):
            other = other.to_fraction()
        return self.to_fraction() <= other

    def __gt__(self, other):
        if isinstance(other, FixedReal):
            other = other.to_fraction()
        return self.to_fraction() > other

    def __ge__(self, other):
        if isinstance(other, FixedReal):
            other = other.to_fraction()
        return self.to_fraction() >= other

    def __hash__(self):
        return hash(self.to_fraction())

    def default_digits(self) -> int:
        """Decimal places that the binary scale actually resolves."""
        return int(self.scale_bits * math.log10(2))

    def to_decimal(self, digits: int | None = None) -> str:
        """Decimal string with ``digits`` places after the point (rounded)."""
        if digits is None:
            digits = self.default_digits()
        scaled = round_div(self.mantissa * 10**digits, 1 << self.scale_bits)
        sign = "-" if scaled < 0 else ""
        scaled = abs(scaled)
        if digits == 0:
            return f"{sign}{scaled}"
        whole, frac = divmod(scaled, 10**digits)
        return f"{sign}{whole}.{frac:0{digits}d}"

    def __str__(self):
        digits = self.default_digits()
        return f"{self.to_decimal(digits)} ({digits} digits)"


def fixed_from_rational(q, scale_bits: int) -> FixedReal:
    """Nearest FixedReal to ``q`` at the given scale (ties to even)."""
    if scale_bits < 0:
        raise ValueError("scale_bits must be non-negative")
    q = Fraction(q)
    return FixedReal(round_div(q.numerator << scale_bits, q.denominator), scale_bits)
