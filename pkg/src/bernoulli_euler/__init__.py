"""Exact Bernoulli and Euler numbers, certified remainders of the expansions of
2/(e^t+1), sech t, coth t and t/(e^t-1), and the gamma-function bounds built
on them."""

from __future__ import annotations

from .errors import BudgetError, DomainError, PrecisionError, QuadratureError, RangeError
from .exact_core import (
    SCHEMES,
    Poly,
    bernoulli,
    bernoulli_poly,
    bernoulli_quarter_identity,
    euler_at_zero,
    euler_number,
    euler_number_from_poly,
    euler_poly,
    euler_poly_at_one_identity,
    quad_recurrence,
    scheme_domain,
    zeta_even_coeff,
)
from .expansions import (
    Enclosure,
    EvalResult,
    binet_partial,
    binet_remainder,
    conjecture_fn,
    coth_partial,
    direct_eval,
    enclosure,
    eta_derivative_gap,
    eta_partial,
    eta_remainder,
    eta_remainder_integral,
    nu_from_coth,
    nu_integral,
    nu_quarter_via_sech,
    nu_series,
    remainder_sign_gap,
    s_series,
    sech_partial,
    sech_remainder,
    sigma_series,
    theta_cap,
    theta_low,
)
from .gamma_bounds import (
    GammaEnclosure,
    Report,
    barnes_integrand_sign,
    chen_qi_bounds,
    cm_finite_difference_check,
    cm_function_eval,
    gamma_gen_euler,
    log_gamma_enclosure,
    quad_log_const,
    ratio_bounds,
    ratio_quarters_direct,
    ratio_quarters_enclosure,
    wallis_bounds,
    wallis_exact,
)
from .grids import Grid, parse_grid

__version__ = "0.1.0"
