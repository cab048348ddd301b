"""
Exact Bernoulli numbers, convention B_1 = -1/2.

``bernoulli_recurrence`` is the default route: it solves
sum_{k<n} C(n, k) B_k = 0 for the top term.  ``bernoulli_double_sum`` is a
completely separate derivation kept as a cross-check.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .numeric import binomial

__all__ = [
    "BernoulliTable",
    "bernoulli_double_sum",
    "bernoulli_recurrence",
    "bernoulli_table",
    "check_identity_6k",
]


@dataclass(frozen=True)
class BernoulliTable:
    max_index: int
    values: tuple[Fraction, ...]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


# Grows monotonically and is only ever appended to under the lock, so
# readers holding a prefix slice never see it change.
_cache: list[Fraction] = [Fraction(1)]
_cache_lock = threading.Lock()


def _extend_cache(max_index: int) -> None:
    with _cache_lock:
        for n in range(len(_cache), max_index + 1):
            # sum_{k=0}^{n} C(n+1, k) B_k = 0, solved for B_n
            s = Fraction(0)
            for k in range(n):
                b = _cache[k]
                if b:
                    s += binomial(n + 1, k) * b
            _cache.append(-s / (n + 1))


def _reset_cache() -> None:
    # test hook: lets timing checks start from a cold cache
    with _cache_lock:
        del _cache[1:]


def bernoulli_table(max_index: int) -> BernoulliTable:
    """B_0 .. B_max_index from one triangular pass of the recurrence."""
    if max_index < 0:
        raise ValueError("max_index must be non-negative")
    if len(_cache) <= max_index:
        _extend_cache(max_index)
    return BernoulliTable(max_index, tuple(_cache[: max_index + 1]))


def bernoulli_recurrence(n: int) -> Fraction:
    if n < 0:
        raise ValueError("index must be non-negative")
    if len(_cache) <= n:
        _extend_cache(n)
    return _cache[n]


def bernoulli_double_sum(n: int) -> Fraction:
    """B_n = sum_{k=0}^n 1/(k+1) sum_{r=0}^k (-1)^r C(k, r) r^n, with 0^0 = 1."""
    if n < 0:
        raise ValueError("index must be non-negative")
    powers = [r**n for r in range(n + 1)]  # Python already has 0**0 == 1
    total = Fraction(0)
    for k in range(n + 1):
        inner = 0
        for r in range(k + 1):
            term = binomial(k, r) * powers[r]
            inner += -term if r & 1 else term
        if inner:
            total += Fraction(inner, k + 1)
    return total


def check_identity_6k(n: int) -> tuple[Fraction, Fraction]:
    """Left-hand sides of the two 6k-step identities.

    Returns (sum_k C(6n+3, 6k) B_6k, sum_k C(6n+5, 6k+2) B_{6k+2}); these
    should equal 2n+1 and (6n+5)/3.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    table = bernoulli_table(6 * n + 2)
    first = sum((binomial(6 * n + 3, 6 * k) * table[6 * k] for k in range(n + 1)), Fraction(0))
    second = sum(
        (binomial(6 * n + 5, 6 * k + 2) * table[6 * k + 2] for k in range(n + 1)), Fraction(0)
    )
    return first, second
