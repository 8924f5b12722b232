from lis312.algebra.polynomial import (
    BIVARIATE_RING,
    ONE,
    Q,
    UNIVARIATE_RING,
    UNIVARIATE_X,
    X,
    BivariatePolynomial,
    x_coefficients,
    x_poly,
)
from lis312.algebra.rational import (
    RationalGF,
    UnivariateRGF,
    add,
    at_q1,
    d2_dq2_at_q1,
    d_dq_at_q1,
    div,
    evaluate,
    mul,
    sub,
)
from lis312.algebra.series import coeffs_by_recurrence, series

__all__ = [
    "BivariatePolynomial",
    "X",
    "Q",
    "ONE",
    "BIVARIATE_RING",
    "UNIVARIATE_RING",
    "UNIVARIATE_X",
    "x_poly",
    "x_coefficients",
    "RationalGF",
    "UnivariateRGF",
    "add",
    "sub",
    "mul",
    "div",
    "evaluate",
    "at_q1",
    "d_dq_at_q1",
    "d2_dq2_at_q1",
    "series",
    "coeffs_by_recurrence",
]
