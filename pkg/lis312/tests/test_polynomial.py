from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

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
from lis312.errors import InvalidInputError

exponents = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(exponents, st.integers(-5, 5), max_size=5).map(BivariatePolynomial)
points = st.fractions(min_value=-3, max_value=3, max_denominator=7)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == BivariatePolynomial.zero()
    assert a * ONE == a


@given(polys, polys, points, points)
def test_eval_is_a_ring_homomorphism(a, b, x0, q0):
    assert (a * b).eval(x0, q0) == a.eval(x0, q0) * b.eval(x0, q0)
    assert (a - b).eval(x0, q0) == a.eval(x0, q0) - b.eval(x0, q0)


def test_zero_coefficients_are_dropped():
    p = BivariatePolynomial({(1, 0): 2, (0, 1): 0}) + BivariatePolynomial({(1, 0): -2})
    assert p.is_zero()
    assert len(p) == 0
    assert p.total_degree == -1


def test_negative_exponent_rejected():
    with pytest.raises(InvalidInputError):
        BivariatePolynomial({(-1, 0): 1})


def test_canonical_text_order():
    den = (ONE - X * Q) ** 2 - X**2 * Q
    assert den.to_text() == "1 - 2*x*q - x^2*q + x^2*q^2"
    assert (ONE - X).to_text() == "1 - x"
    assert BivariatePolynomial.zero().to_text() == "0"
    assert BivariatePolynomial({(1, 0): Fraction(1, 2)}).to_text() == "1/2*x"
    assert (-X).to_text() == "-x"


def test_json_terms_follow_text_order():
    p = ONE - 2 * X * Q
    assert p.to_json_terms() == [[0, 0, "1"], [1, 1, "-2"]]


def test_substitution_and_derivative():
    p = ONE + X * Q + 3 * X**2 * Q**2
    assert p.subs_q(1) == x_poly((1, 1, 3))
    assert x_coefficients(p.subs_q(2)) == [1, 2, 12]
    assert x_coefficients(p.subs_q(Fraction(1, 3))) == [1, Fraction(1, 3), Fraction(1, 3)]
    assert p.diff_q() == X + 6 * X**2 * Q
    assert p.deg_x == 2 and p.deg_q == 2


def test_backed_by_sparse_ring_elements():
    x, q = BIVARIATE_RING.gens
    assert X.element == x
    assert (ONE - X * Q).element == 1 - x * q
    p = BivariatePolynomial({(2, 1): Fraction(3, 4), (0, 0): -1})
    assert BivariatePolynomial.wrap(p.element) == p
    assert p.coeff(2, 1) == Fraction(3, 4)
    assert isinstance(p.constant_term, Fraction)
    with pytest.raises(InvalidInputError):
        BivariatePolynomial.wrap(UNIVARIATE_RING.one)


def test_univariate_helpers():
    assert x_coefficients(x_poly((1, 0, Fraction(-1, 2)))) == [1, 0, Fraction(-1, 2)]
    assert x_coefficients(x_poly(())) == []
    assert x_poly((0, 1)) == UNIVARIATE_X
    assert BivariatePolynomial.from_x_univariate((1, 2)) == ONE + 2 * X
    with pytest.raises(InvalidInputError):
        x_poly(BIVARIATE_RING.one)


def test_scaling_keeps_exact_rationals():
    p = BivariatePolynomial({(0, 0): Fraction(2, 3), (1, 0): Fraction(4, 3)})
    assert p.scale(Fraction(3, 2)) == ONE + 2 * X
    assert (p * 3).terms == {(0, 0): 2, (1, 0): 4}


@settings(max_examples=40, deadline=None)
@given(polys, polys, points, points)
def test_subs_q_commutes_with_multiplication(a, b, x0, q0):
    lhs = (a * b).subs_q(q0)
    assert lhs == a.subs_q(q0) * b.subs_q(q0)
    assert sum(c * x0**i for i, c in enumerate(x_coefficients(lhs))) == (a * b).eval(x0, q0)
