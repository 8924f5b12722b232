from lis312.cheb.asymptotics import (
    IncreasingAsymptotics,
    PatternAsymptotics,
    PoleTerm,
    RealInterval,
    alpha_constants,
    catalan,
    decreasing_growth,
    dominant_pole_term,
    growth_rate,
    increasing_asymptotics,
    narayana,
    pattern_asymptotics,
    pattern_slope,
    slope_decreasing,
    slope_hat,
    slope_hat_with_u1_term,
    table4_cubic_root,
    table4_cubic_slope,
)
from lis312.cheb.chebyshev import (
    ChebPoly,
    RationalizedKernel,
    cheb_product_check,
    cheb_u,
    cheb_u_value,
    kernel_p,
    kernel_q,
    rationalization_certificate,
)
from lis312.cheb.closed_forms import (
    at_q1_decreasing,
    dq_decreasing_closed,
    dq_hat_closed,
    dq_hat_with_u1_term,
    f_decreasing,
    f_hat,
    f_increasing,
)

__all__ = [
    "ChebPoly",
    "RationalizedKernel",
    "cheb_u",
    "cheb_u_value",
    "cheb_product_check",
    "kernel_p",
    "kernel_q",
    "rationalization_certificate",
    "f_decreasing",
    "f_hat",
    "f_increasing",
    "dq_decreasing_closed",
    "dq_hat_closed",
    "dq_hat_with_u1_term",
    "at_q1_decreasing",
    "catalan",
    "narayana",
    "RealInterval",
    "growth_rate",
    "PoleTerm",
    "dominant_pole_term",
    "PatternAsymptotics",
    "pattern_asymptotics",
    "pattern_slope",
    "slope_decreasing",
    "slope_hat",
    "slope_hat_with_u1_term",
    "alpha_constants",
    "decreasing_growth",
    "IncreasingAsymptotics",
    "increasing_asymptotics",
    "table4_cubic_root",
    "table4_cubic_slope",
]
