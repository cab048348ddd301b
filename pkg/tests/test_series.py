from fractions import Fraction

import mpmath
import pytest

from bernoulli.engine import bernoulli_recurrence
from bernoulli.numeric import FixedReal, fixed_from_rational
from bernoulli.series import (
    FunctionTag,
    evaluate_truncated,
    expansion_coeff,
    series_coefficients,
)
from oracles import cos_series, factorial_loop, series_divide, sin_series

T = FunctionTag
ORDER = 24


def tan_oracle():
    return series_divide(sin_series(ORDER), cos_series(ORDER), ORDER)


def x_cot_oracle():
    # x cot x = cos x / (sin x / x)
    sin_over_x = sin_series(ORDER + 1)[1:]
    return series_divide(cos_series(ORDER), sin_over_x, ORDER)


def sinh_series(n):
    return [abs(c) for c in sin_series(n)]


def cosh_series(n):
    return [abs(c) for c in cos_series(n)]


def test_examples():
    assert expansion_coeff(T.EXP_GEN, 2) == Fraction(1, 12)
    assert [expansion_coeff(T.TAN, m) for m in (3, 5, 7)] == [
        Fraction(1, 3),
        Fraction(2, 15),
        Fraction(17, 315),
    ]
    assert expansion_coeff(T.COT, 1) == Fraction(-1, 3)
    assert expansion_coeff(T.COT, -1) == 1
    assert expansion_coeff(T.TANH, 1) == 1


def test_tan_against_series_division():
    oracle = tan_oracle()
    for m in range(ORDER):
        assert expansion_coeff(T.TAN, m) == oracle[m], m


def test_cot_against_series_division():
    oracle = x_cot_oracle()  # coefficient of x^m in x cot x is cot's x^(m-1)
    for m in range(ORDER):
        assert expansion_coeff(T.COT, m - 1) == oracle[m], m


def test_tanh_coth_against_series_division():
    tanh = series_divide(sinh_series(ORDER), cosh_series(ORDER), ORDER)
    x_coth = series_divide(cosh_series(ORDER), sinh_series(ORDER + 1)[1:], ORDER)
    for m in range(ORDER):
        assert expansion_coeff(T.TANH, m) == tanh[m]
        assert expansion_coeff(T.COTH, m - 1) == x_coth[m]


def test_exp_gen_is_bernoulli():
    for n in range(41):
        assert expansion_coeff(T.EXP_GEN, n) * factorial_loop(n) == bernoulli_recurrence(n)


def test_half_coth_identity():
    for m in range(0, 41):
        if m % 2 == 0:
            assert expansion_coeff(T.X_COTH_HALF, m) == expansion_coeff(T.EXP_GEN, m)
        else:
            assert expansion_coeff(T.X_COTH_HALF, m) == 0
        if m >= 3 and m % 2:
            assert expansion_coeff(T.EXP_GEN, m) == 0
    # x/(e^x - 1) + x/2 = (x/2) coth(x/2): only the x^1 term differs
    assert expansion_coeff(T.EXP_GEN, 1) + Fraction(1, 2) == expansion_coeff(T.X_COTH_HALF, 1)


def test_tanh_from_coth():
    # 2 coth(2x) - coth(x) = tanh(x), coefficient by coefficient
    for m in range(-1, 22):
        lhs = 2 * 2**m * expansion_coeff(T.COTH, m) - expansion_coeff(T.COTH, m)
        rhs = expansion_coeff(T.TANH, m) if m >= 0 else 0
        assert lhs == rhs, m


def test_generating_identity_cauchy_product():
    # (x / (e^x - 1)) * ((e^x - 1) / x) = 1
    other = [Fraction(1, factorial_loop(j + 1)) for j in range(21)]
    for m in range(21):
        c = sum(expansion_coeff(T.EXP_GEN, i) * other[m - i] for i in range(m + 1))
        assert c == (1 if m == 0 else 0), m


def test_parity_and_signs():
    for m in range(0, 22):
        if m % 2 == 0:
            for tag in (T.TAN, T.TANH, T.COT, T.COTH):
                assert expansion_coeff(tag, m) == 0
        else:
            assert expansion_coeff(T.TAN, m) > 0
            assert expansion_coeff(T.COT, m) < 0


def test_domain_rejections():
    with pytest.raises(ValueError):
        expansion_coeff(T.EXP_GEN, -1)
    with pytest.raises(ValueError):
        expansion_coeff(T.X_COTH_HALF, -1)
    with pytest.raises(ValueError):
        expansion_coeff(T.TAN, -1)
    with pytest.raises(ValueError):
        expansion_coeff(T.COT, -2)
    with pytest.raises(ValueError):
        FunctionTag.parse("csc")


def test_series_listing():
    assert series_coefficients(T.TAN, 7) == [
        (1, 1),
        (3, Fraction(1, 3)),
        (5, Fraction(2, 15)),
        (7, Fraction(17, 315)),
    ]
    assert series_coefficients(T.EXP_GEN, 2) == [(0, 1), (1, Fraction(-1, 2)), (2, Fraction(1, 12))]
    assert series_coefficients(T.COT, 1) == [(-1, 1), (1, Fraction(-1, 3))]
    assert series_coefficients("tanh", 3) == [(1, 1), (3, Fraction(-1, 3))]


def test_evaluate_examples():
    x = fixed_from_rational(Fraction(1, 2), 64)
    assert abs(float(evaluate_truncated(T.TAN, x, 15)) - float(mpmath.tan(0.5))) < 1e-6
    assert abs(float(evaluate_truncated(T.TAN, x, 15)) - 0.5463024898) < 1e-6
    assert evaluate_truncated(T.EXP_GEN, FixedReal(0, 64), 9).to_fraction() == 1
    one = FixedReal.from_int(1, 64)
    coth1 = float(mpmath.coth(1))
    assert abs(float(evaluate_truncated(T.COTH, one, 21)) - coth1) < 1e-4
    assert abs(coth1 - 1.3130352855) < 1e-9


@pytest.mark.parametrize(
    "tag, func, x",
    [
        (T.COT, mpmath.cot, Fraction(3, 10)),
        (T.TANH, mpmath.tanh, Fraction(-2, 5)),
        (T.X_COTH_HALF, lambda t: t / 2 * mpmath.coth(t / 2), Fraction(7, 5)),
        (T.EXP_GEN, lambda t: t / (mpmath.exp(t) - 1), Fraction(1, 3)),
    ],
)
def test_evaluate_against_direct(tag, func, x):
    value = evaluate_truncated(tag, fixed_from_rational(x, 64), 31)
    assert abs(float(value) - float(func(mpmath.mpf(x.numerator) / x.denominator))) < 1e-8


def test_evaluate_domain():
    with pytest.raises(ValueError):
        evaluate_truncated(T.TAN, fixed_from_rational(Fraction(16, 10), 32), 5)
    with pytest.raises(ValueError):
        evaluate_truncated(T.COT, fixed_from_rational(Fraction(315, 100), 32), 5)
    with pytest.raises(ValueError):
        evaluate_truncated(T.COT, FixedReal(0, 32), 5)
    with pytest.raises(ValueError):
        evaluate_truncated(T.TAN, FixedReal(0, 32), 0)
    # pi/2 - 0.01 is still inside the tan domain
    evaluate_truncated(T.TAN, fixed_from_rational(Fraction(156, 100), 32), 5)
