from fractions import Fraction

import mpmath
import pytest

from lis312.algebra.polynomial import ONE, X
from lis312.algebra.rational import RationalGF, UnivariateRGF, at_q1
from lis312.cheb.asymptotics import (
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
from lis312.cheb.closed_forms import f_decreasing, f_hat, f_increasing
from lis312.errors import InvalidInputError, NoDominantSingularityError
from lis312.gf.stats import moments_at

TIGHT = mpmath.mpf("1e-25")


@pytest.fixture(autouse=True)
def high_precision():
    # 与 ChebConfig 默认精度一致，避免在 53 位下比较
    with mpmath.workprec(128):
        yield


def decreasing(m: int) -> tuple[int, ...]:
    return tuple(range(m, 0, -1))


def hat(m: int) -> tuple[int, ...]:
    return (m - 1, m) + tuple(range(m - 2, 0, -1))


def test_catalan_and_narayana():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    for n in range(1, 10):
        assert sum(narayana(n, k) for k in range(1, n + 1)) == catalan(n)
    assert narayana(4, 2) == 6


def test_real_interval():
    interval = RealInterval(Fraction(1), Fraction(3, 2))
    assert interval.width == Fraction(1, 2)
    assert interval.midpoint == Fraction(5, 4)
    assert interval.contains(Fraction(6, 5))
    assert not interval.contains(2)


def test_growth_rate_of_simple_poles(cheb_config):
    assert growth_rate(UnivariateRGF((1,), (1, -2)), config=cheb_config).contains(2)
    golden = growth_rate(UnivariateRGF((1,), (1, -1, -1)), config=cheb_config)
    assert abs(golden.to_mpf() - (1 + mpmath.sqrt(5)) / 2) < mpmath.mpf("1e-18")
    assert golden.width < cheb_config.root_width


def test_no_positive_pole(cheb_config):
    with pytest.raises(NoDominantSingularityError):
        growth_rate(UnivariateRGF((1,), (1, 1)), config=cheb_config)
    with pytest.raises(NoDominantSingularityError):
        growth_rate(UnivariateRGF((1, 1)), config=cheb_config)


@pytest.mark.parametrize("m", range(2, 11))
def test_decreasing_growth_rate(cheb_config, m):
    interval = growth_rate(at_q1(f_decreasing(m)), config=cheb_config)
    expected = decreasing_growth(m, config=cheb_config)
    assert abs(interval.to_mpf() - expected) < mpmath.mpf("1e-15")


def test_dominant_pole_terms(cheb_config):
    simple = dominant_pole_term(UnivariateRGF((1,), (1, -2)), config=cheb_config)
    assert simple.order == 1
    assert abs(simple.constant - 1) < TIGHT
    assert abs(simple.growth - 2) < TIGHT
    double = dominant_pole_term(UnivariateRGF((1,), (1, -2, 1)), config=cheb_config)
    assert double.order == 2
    assert abs(double.constant - 1) < TIGHT


def test_poles_sharing_the_dominant_modulus(cheb_config):
    # 1/(1 - x^2)：x = 1 与 x = -1 同模
    with pytest.raises(NoDominantSingularityError):
        dominant_pole_term(UnivariateRGF((1,), (1, 0, -1)), config=cheb_config)
    with pytest.raises(NoDominantSingularityError):
        pattern_asymptotics(RationalGF(ONE, ONE - X**2), config=cheb_config)
    # 1 - x^3 的两个复根也在单位圆上
    with pytest.raises(NoDominantSingularityError):
        dominant_pole_term(UnivariateRGF((1,), (1, 0, 0, -1)), config=cheb_config)
    # (1 - 2x)(1 + x)：-1 离原点更远，不影响 x = 1/2
    term = dominant_pole_term(UnivariateRGF((1,), (1, -1, -2)), config=cheb_config)
    assert term.order == 1
    assert abs(term.rho - mpmath.mpf(1) / 2) < TIGHT
    assert abs(term.constant - mpmath.mpf(2) / 3) < TIGHT


def test_small_slopes(cheb_config):
    assert abs(slope_decreasing(2, config=cheb_config) - 1) < TIGHT
    assert abs(slope_decreasing(3, config=cheb_config) - mpmath.mpf(3) / 4) < TIGHT
    assert abs(slope_decreasing(4, config=cheb_config) - (2 - 3 / mpmath.sqrt(5))) < TIGHT
    assert abs(slope_hat(4, config=cheb_config) - (1 - 1 / mpmath.sqrt(5))) < TIGHT
    assert mpmath.nstr(slope_decreasing(4, config=cheb_config), 6) == "0.658359"


@pytest.mark.parametrize("m", range(2, 8))
def test_decreasing_slope_matches_poles(cheb_config, m):
    computed = pattern_slope(f_decreasing(m), config=cheb_config)
    assert abs(computed - slope_decreasing(m, config=cheb_config)) < TIGHT


@pytest.mark.parametrize("m", range(4, 8))
def test_hat_slope_matches_poles(cheb_config, m):
    computed = pattern_slope(f_hat(m), config=cheb_config)
    assert abs(computed - slope_hat(m, config=cheb_config)) < TIGHT
    assert abs(computed - slope_hat_with_u1_term(m, config=cheb_config)) > mpmath.mpf("1e-3")


def test_pattern_slope_accepts_patterns(cheb_config):
    assert abs(pattern_slope((3, 2, 1), config=cheb_config) - mpmath.mpf(3) / 4) < TIGHT
    assert pattern_slope((1, 2, 3), config=cheb_config) == 0


@pytest.mark.parametrize("m", range(3, 9))
def test_alpha_constants_match_residues(cheb_config, m):
    alpha, alpha_tilde = alpha_constants(m, config=cheb_config)
    result = pattern_asymptotics(f_decreasing(m), config=cheb_config)
    assert result.count.order == 1
    assert result.mean_exponent == 1
    assert abs(result.count.constant / alpha_tilde - 1) < TIGHT
    assert abs(result.mean_constant - alpha / alpha_tilde) < TIGHT
    assert abs(alpha / alpha_tilde - slope_decreasing(m, config=cheb_config)) < TIGHT


def test_alpha_tilde_of_321(cheb_config):
    _, alpha_tilde = alpha_constants(3, config=cheb_config)
    assert abs(alpha_tilde - mpmath.mpf(1) / 2) < TIGHT


def test_bounded_mean_for_increasing_patterns(cheb_config):
    result = pattern_asymptotics(f_increasing(4), config=cheb_config)
    assert result.mean_exponent == 0
    assert abs(result.mean_constant - 3) < TIGHT


def test_increasing_asymptotics_constants():
    info = increasing_asymptotics(4)
    assert info.lead_coefficient == Fraction(1, 12)
    assert info.power == 4
    assert info.expected_limit == 3
    assert increasing_asymptotics(5).lead_coefficient == Fraction(1, 144)
    with pytest.raises(InvalidInputError):
        increasing_asymptotics(2)


def test_argument_checks():
    with pytest.raises(InvalidInputError):
        slope_decreasing(1)
    with pytest.raises(InvalidInputError):
        slope_hat(3)
    with pytest.raises(InvalidInputError):
        alpha_constants(1)


def test_cubic_root_and_slope(cheb_config):
    root = table4_cubic_root(config=cheb_config)
    assert abs(root.to_mpf() - mpmath.mpf("2.4655712")) < mpmath.mpf("1e-7")
    assert abs(table4_cubic_slope(config=cheb_config) - mpmath.mpf("0.478947")) < mpmath.mpf("1e-5")
    assert abs(pattern_slope((2, 3, 4, 1), config=cheb_config) - table4_cubic_slope(config=cheb_config)) < TIGHT


@pytest.mark.slow
@pytest.mark.parametrize("m", range(3, 7))
def test_decreasing_slope_against_exact_mean(engine, cheb_config, m):
    n = 5000
    row = moments_at(decreasing(m), n, engine=engine)
    ratio = mpmath.mpf(row.mean.numerator) / row.mean.denominator / n
    slope = slope_decreasing(m, config=cheb_config)
    assert abs(ratio / slope - 1) < mpmath.mpf("0.005")


@pytest.mark.slow
@pytest.mark.parametrize("m", range(4, 7))
def test_hat_slope_against_exact_mean(engine, cheb_config, m):
    n = 5000
    row = moments_at(hat(m), n, engine=engine)
    ratio = mpmath.mpf(row.mean.numerator) / row.mean.denominator / n
    assert abs(ratio / slope_hat(m, config=cheb_config) - 1) < mpmath.mpf("0.005")


@pytest.mark.slow
@pytest.mark.parametrize("m", (4, 5))
def test_increasing_counts_and_limit(engine, m):
    info = increasing_asymptotics(m)
    pattern = tuple(range(1, m + 1))
    row = moments_at(pattern, 500, engine=engine)
    assert abs(info.count_ratio(500, row.count) - 1) < Fraction(5, 100)
    far = moments_at(pattern, 2000, engine=engine)
    assert abs(far.mean - info.expected_limit) < Fraction(2, 100)
