"""Exact Bernoulli numbers and the things built from them."""

from .engine import (
    BernoulliTable,
    bernoulli_double_sum,
    bernoulli_recurrence,
    bernoulli_table,
    check_identity_6k,
)
from .faulhaber import PowerSumPoly, power_sum_exclusive, power_sum_inclusive, power_sum_poly
from .irregular import (
    IrregularPair,
    Regularity,
    irregular_indices_modp,
    irregular_primes_up_to,
    is_regular,
    numerator_mod_p,
)
from .numeric import (
    FixedReal,
    binomial,
    factorial,
    fixed_from_rational,
    format_rational,
    parse_rational,
    primes_up_to,
)
from .series import FunctionTag, evaluate_truncated, expansion_coeff, series_coefficients
from .staudt_clausen import (
    ReconstructionError,
    reconstruct_from_approx,
    sc_denominator,
    sc_fractional_part,
)
from .zeta import (
    PrecisionPlan,
    bernoulli_estimate,
    bernoulli_zeta,
    pi_fixed,
    plan_precision,
    zeta_even,
)

__version__ = "0.1.0"
