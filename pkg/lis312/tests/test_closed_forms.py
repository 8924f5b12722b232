import pytest

from lis312.algebra.rational import UnivariateRGF, at_q1, d_dq_at_q1
from lis312.cheb.closed_forms import (
    at_q1_decreasing,
    dq_decreasing_closed,
    dq_hat_closed,
    dq_hat_with_u1_term,
    f_decreasing,
    f_hat,
    f_increasing,
)
from lis312.errors import InvalidInputError


def decreasing(m: int) -> tuple[int, ...]:
    return tuple(range(m, 0, -1))


def hat(m: int) -> tuple[int, ...]:
    return (m - 1, m) + tuple(range(m - 2, 0, -1))


@pytest.mark.parametrize("m", range(1, 8))
def test_decreasing_family(engine, m):
    assert f_decreasing(m) == engine.f_tau(decreasing(m))


@pytest.mark.parametrize("m", range(3, 8))
def test_hat_family(engine, m):
    assert f_hat(m) == engine.f_tau(hat(m))


@pytest.mark.parametrize("m", range(1, 8))
def test_increasing_family(engine, m):
    assert f_increasing(m) == engine.f_tau(tuple(range(1, m + 1)))


def test_decreasing_four_at_q1():
    assert at_q1(f_decreasing(4)) == UnivariateRGF((1, -2), (1, -3, 1))


@pytest.mark.parametrize("m", range(1, 9))
def test_dq_decreasing_closed_form(m):
    assert dq_decreasing_closed(m) == d_dq_at_q1(f_decreasing(m))


@pytest.mark.parametrize("m", range(4, 8))
def test_dq_hat_closed_form(engine, m):
    direct = d_dq_at_q1(engine.f_tau(hat(m)))
    assert dq_hat_closed(m) == direct
    # 多计一项 U_1² 的版本与引擎不一致
    assert dq_hat_with_u1_term(m) != direct


@pytest.mark.parametrize("m", range(3, 9))
def test_decreasing_and_hat_have_equal_counts(m):
    assert at_q1(f_decreasing(m)) == at_q1(f_hat(m))


@pytest.mark.parametrize("m", range(2, 9))
def test_at_q1_decreasing(m):
    assert at_q1_decreasing(m) == at_q1(f_decreasing(m))


def test_argument_checks():
    with pytest.raises(InvalidInputError):
        f_decreasing(0)
    with pytest.raises(InvalidInputError):
        f_hat(2)
    with pytest.raises(InvalidInputError):
        dq_hat_closed(3)
    with pytest.raises(InvalidInputError):
        at_q1_decreasing(1)
