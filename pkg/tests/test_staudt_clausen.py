import math
from fractions import Fraction

import pytest

from bernoulli.engine import bernoulli_recurrence
from bernoulli.numeric import FixedReal, fixed_from_rational
from bernoulli.staudt_clausen import (
    ReconstructionError,
    reconstruct_from_approx,
    sc_denominator,
    sc_fractional_part,
    sc_primes,
)

EVEN_TO_60 = range(2, 61, 2)


@pytest.mark.parametrize("two_k, d", [(2, 6), (16, 510), (12, 2730)])
def test_denominator_examples(two_k, d):
    assert sc_denominator(two_k) == d


def test_primes_for_16():
    assert sc_primes(16) == [2, 3, 5, 17]


@pytest.mark.parametrize(
    "two_k, frac", [(16, Fraction(463, 510)), (14, Fraction(1, 6)), (2, Fraction(1, 6))]
)
def test_fractional_part_examples(two_k, frac):
    assert sc_fractional_part(two_k) == frac


@pytest.mark.parametrize("bad", [0, -2, 3, 15, 1])
def test_rejects_bad_index(bad):
    with pytest.raises(ValueError):
        sc_denominator(bad)
    with pytest.raises(ValueError):
        sc_fractional_part(bad)


def test_denominator_matches_exact():
    for two_k in EVEN_TO_60:
        assert sc_denominator(two_k) == bernoulli_recurrence(two_k).denominator


def test_fractional_part_matches_exact():
    for two_k in EVEN_TO_60:
        b = bernoulli_recurrence(two_k)
        frac = sc_fractional_part(two_k)
        assert frac == b - math.floor(b)
        assert 0 <= frac < 1


@pytest.mark.parametrize("k", [7, 13, 19, 31, 37])
def test_primes_one_mod_three_give_one_sixth(k):
    assert k % 3 == 1
    assert sc_fractional_part(2 * k) == Fraction(1, 6)


def test_denominator_squarefree():
    for two_k in range(2, 400, 2):
        d = sc_denominator(two_k)
        assert all(d % (p * p) for p in sc_primes(two_k))
        assert math.prod(sc_primes(two_k)) == d


def test_reconstruct_examples():
    approx = fixed_from_rational(Fraction(-70921568627, 10**10), 64)
    assert reconstruct_from_approx(16, approx) == Fraction(-3617, 510)
    assert reconstruct_from_approx(2, fixed_from_rational(Fraction(1666666667, 10**10), 40)) == Fraction(1, 6)
    assert reconstruct_from_approx(14, fixed_from_rational(Fraction(11666666667, 10**10), 40)) == Fraction(7, 6)


def test_reconstruct_round_trip():
    for two_k in EVEN_TO_60:
        b = bernoulli_recurrence(two_k)
        assert reconstruct_from_approx(two_k, fixed_from_rational(b, 128)) == b


def test_reconstruct_rejects_coarse_approximation():
    # 1/6 + 1/(2*6): exactly on the rounding boundary between 1/6 and 2/6
    with pytest.raises(ReconstructionError):
        reconstruct_from_approx(2, fixed_from_rational(Fraction(1, 4), 16))
    # -7 is a whole number of 510ths but not congruent to the B_16 residue
    with pytest.raises(ReconstructionError):
        reconstruct_from_approx(16, FixedReal.from_int(-7, 32))
