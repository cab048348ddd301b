"""
Kummer's regularity test: a prime p >= 5 is regular iff it divides none of
the numerators of B_2, B_4, ..., B_{p-3}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .engine import bernoulli_table
from .numeric import is_prime, primes_up_to

__all__ = [
    "IrregularPair",
    "Regularity",
    "irregular_indices_modp",
    "irregular_primes_up_to",
    "is_regular",
    "numerator_mod_p",
]


@dataclass(frozen=True, order=True)
class IrregularPair:
    p: int
    index: int


class Regularity(NamedTuple):
    regular: bool
    indices: tuple[int, ...]


def _check_prime(p, minimum):
    if not isinstance(p, int) or p < minimum or not is_prime(p):
        raise ValueError(f"expected a prime >= {minimum}, got {p!r}")


def numerator_mod_p(two_k: int, p: int) -> int:
    """Numerator of B_two_k reduced mod p, for even 2 <= two_k <= p - 3."""
    _check_prime(p, 3)
    if two_k % 2 or not 2 <= two_k <= p - 3:
        raise ValueError(f"index must be even and in [2, {p - 3}], got {two_k}")
    return bernoulli_table(two_k)[two_k].numerator % p


def _exact_indices(p, table):
    return tuple(
        two_k for two_k in range(2, p - 2, 2) if table[two_k].numerator % p == 0
    )


def irregular_indices_modp(p: int) -> tuple[int, ...]:
    """Even indices 2k <= p-3 with p | numerator(B_2k), all arithmetic mod p.

    Runs the double sum B_n = sum_k 1/(k+1) sum_r (-1)^r C(k,r) r^n mod p.
    The inner sum is (-1)^k k! S(n, k) with S the Stirling numbers of the
    second kind, which fill in row by row in O(p^2).  The inverses of k+1
    exist because k+1 <= p-2.
    """
    _check_prime(p, 5)
    top = p - 3
    inv = [0] + [pow(j, -1, p) for j in range(1, top + 2)]
    fact = [1] * (top + 1)
    for k in range(1, top + 1):
        fact[k] = fact[k - 1] * k % p
    weight = [(-1) ** k * fact[k] * inv[k + 1] % p for k in range(top + 1)]

    found = []
    row = [1]  # S(0, 0)
    for n in range(1, top + 1):
        new = [0] * (n + 1)
        for k in range(1, n + 1):
            prev = row[k] if k < n else 0
            new[k] = (k * prev + row[k - 1]) % p
        row = new
        if n % 2 == 0:
            b = sum(weight[k] * row[k] for k in range(n + 1)) % p
            if b == 0:
                found.append(n)
    return tuple(found)


def is_regular(p: int, method: str = "exact") -> Regularity:
    """Kummer test for one prime; ``method`` is "exact" or "modular"."""
    _check_prime(p, 5)
    if method == "exact":
        indices = _exact_indices(p, bernoulli_table(max(p - 3, 0)))
    elif method == "modular":
        indices = irregular_indices_modp(p)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Regularity(not indices, indices)


def irregular_primes_up_to(limit: int, method: str = "exact") -> list[IrregularPair]:
    """Every irregular pair (p, 2k) with 5 <= p <= limit, sorted."""
    primes = [p for p in primes_up_to(limit) if p >= 5]
    if not primes:
        return []
    if method == "exact":
        table = bernoulli_table(primes[-1] - 3)
        per_prime = ((p, _exact_indices(p, table)) for p in primes)
    elif method == "modular":
        per_prime = ((p, irregular_indices_modp(p)) for p in primes)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [IrregularPair(p, i) for p, indices in per_prime for i in indices]
