import random
from fractions import Fraction

import mpmath
import pytest

from lis312.algebra.polynomial import ONE, Q, X, x_poly
from lis312.cheb.chebyshev import (
    RationalizedKernel,
    cheb_product_check,
    cheb_u,
    cheb_u_value,
    kernel_p,
    kernel_q,
    rationalization_certificate,
)
from lis312.errors import InvalidInputError


def test_first_chebyshev_polynomials():
    assert cheb_u(-2).coefficients == (-1,)
    assert cheb_u(-1).coefficients == ()
    assert cheb_u(0).coefficients == (1,)
    assert cheb_u(1).coefficients == (0, 2)
    assert cheb_u(2).coefficients == (-1, 0, 4)
    assert cheb_u(3).coefficients == (0, -4, 0, 8)
    assert cheb_u(3).to_text() == "-4*t + 8*t^3"
    assert cheb_u(5).degree == 5


@pytest.mark.parametrize("m", range(1, 16))
def test_coefficients_satisfy_three_term_recurrence(m):
    def padded(k):
        c = cheb_u(k).coefficients
        return c + (0,) * (m + 1 - len(c))

    shifted = (0,) + padded(m - 1)[:-1]
    expected = tuple(2 * a - b for a, b in zip(shifted, padded(m - 2)))
    assert padded(m) == expected


def test_invalid_indices():
    with pytest.raises(InvalidInputError):
        cheb_u(-3)
    with pytest.raises(InvalidInputError):
        kernel_p(-2)
    with pytest.raises(InvalidInputError):
        kernel_q(-2)
    with pytest.raises(InvalidInputError):
        cheb_product_check(0, mpmath.mpf("0.5"))


@pytest.mark.parametrize("m", range(-2, 16))
def test_value_recursion_matches_coefficients(m):
    t = Fraction(3, 7)
    assert cheb_u_value(m, t) == cheb_u(m)(t)


@pytest.mark.parametrize("n", range(1, 13))
def test_product_formula(n):
    rng = random.Random(n)
    points = [mpmath.mpf(rng.uniform(-1.5, 1.5)) for _ in range(20)]
    points += [mpmath.mpf("0.7"), mpmath.mpf("-0.3"), Fraction(1, 2)]
    for t in points:
        assert cheb_product_check(n, t)


@pytest.mark.parametrize("k", range(-1, 13))
def test_rationalization_certificate(k):
    assert rationalization_certificate(k)


def test_kernel_recursion():
    step = ONE + X - X * Q
    assert kernel_p(0) == ONE
    assert kernel_p(1) == step
    for k in range(2, 9):
        assert kernel_p(k) == step * kernel_p(k - 1) - X * kernel_p(k - 2)


def test_kernel_q_values():
    assert kernel_q(1) == x_poly((1,))
    assert kernel_q(2) == x_poly((1, -1))
    assert kernel_q(3) == x_poly((1, -2))
    assert kernel_q(4) == x_poly((1, -3, 1))
    for k in range(-1, 11):
        assert kernel_q(k) == kernel_p(k).subs_q(1)


def test_rationalized_kernel_snapshot():
    snapshot = RationalizedKernel.build(5)
    assert snapshot.p_at(-1).is_zero()
    assert snapshot.p_at(3) == kernel_p(3)
    assert snapshot.q_at(4) == kernel_q(4)
