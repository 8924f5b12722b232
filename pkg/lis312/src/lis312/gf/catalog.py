"""
已知封闭形式目录，作为递推引擎之外的独立对照。

- S_2、S_3(312)、S_4(312) 的逐个表达式；
- 12…m、m(m-1)…1、(m-1)m(m-2)…1 三个族；
- τ = ρ1：F_τ = 1 / (1 - xq - x(F_ρ - 1))，并由此得到 ∂_q F_τ 在 q = 1 处的恒等式；
- E(L_n)、E(L_n²) 关于 n 的精确公式。
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from lis312.algebra.polynomial import BivariatePolynomial
from lis312.algebra.rational import RationalGF, UnivariateRGF, at_q1, d_dq_at_q1
from lis312.cheb.closed_forms import f_decreasing, f_hat, f_increasing
from lis312.gf.engine import GeneratingFunctionEngine, as_pattern, get_default_engine
from lis312.perm.normal_form import PATTERN_312
from lis312.perm.permutation import Permutation, contains, reduce_word
from lis312.utils.logger_handler import get_logger

logger = get_logger(__name__)

_X = RationalGF(BivariatePolynomial.x())
_Q = RationalGF(BivariatePolynomial.q())
_XQ = _X * _Q
_ONE = RationalGF.one()
_ONE_MINUS_X = _ONE - _X


def _key(pattern: str) -> tuple[int, ...]:
    return tuple(int(c) for c in pattern)


# ---------------------------------------------------------------------------
# 逐个列出的表达式
# ---------------------------------------------------------------------------

F_12 = _ONE + _XQ / _ONE_MINUS_X
F_21 = _ONE / (_ONE - _XQ)

F_123 = _ONE + _XQ / _ONE_MINUS_X + (_XQ**2) / _ONE_MINUS_X**3
F_132 = _ONE_MINUS_X / (_ONE_MINUS_X - _XQ)
F_321 = (_ONE - _XQ) / ((_ONE - _XQ) ** 2 - _X**2 * _Q)

F_1234 = (
    _ONE
    + _XQ / _ONE_MINUS_X
    + _XQ**2 / _ONE_MINUS_X**3
    + _X**3 * (_ONE + _X) * _Q**3 / _ONE_MINUS_X**5
)
F_1243 = _ONE + _XQ * (_Q * _X * (2 * _X - 1) + _ONE_MINUS_X**2) / ((_ONE_MINUS_X - _Q * _X) ** 2 * _ONE_MINUS_X)
F_2314 = _ONE + _XQ * _ONE_MINUS_X / (_ONE_MINUS_X**2 - _Q * _X)
F_2143 = (_ONE_MINUS_X - _Q * _X) / ((_ONE - _Q * _X) ** 2 - _X)
F_2341 = _ONE_MINUS_X**3 / (_ONE_MINUS_X**3 - _XQ * _ONE_MINUS_X**2 - _X**3 * _Q**2)

# 4321 属于递减族，单独由 f_decreasing(4) 给出
CATALOG: dict[tuple[int, ...], RationalGF] = {
    _key("12"): F_12,
    _key("21"): F_21,
    _key("123"): F_123,
    _key("132"): F_132,
    _key("213"): F_132,
    _key("231"): F_132,
    _key("321"): F_321,
    _key("1234"): F_1234,
    _key("1243"): F_1243,
    _key("1324"): F_1243,
    _key("2134"): F_1243,
    _key("2314"): F_2314,
    _key("1342"): F_2314,
    _key("2143"): F_2143,
    _key("3214"): F_2143,
    _key("2431"): F_2143,
    _key("3241"): F_2143,
    _key("3421"): F_2143,
    _key("1432"): F_2143,
    _key("2341"): F_2341,
    _key("4321"): f_decreasing(4),
}


def _is_increasing(values: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(values, values[1:]))


def _is_decreasing(values: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(values, values[1:]))


def _is_hat(values: Sequence[int]) -> bool:
    """(m-1) m (m-2) … 1，m >= 3。"""
    m = len(values)
    return m >= 3 and tuple(values) == (m - 1, m) + tuple(range(m - 2, 0, -1))


def known_closed_form(tau: Permutation | Sequence[int]) -> Optional[RationalGF]:
    """
    返回目录中的封闭形式；不在目录中（或 τ 为空、含 312）时返回 None。

    查找顺序：逐个列出的表达式、递增族、递减族、帽子族、τ = ρ1。
    """
    values = as_pattern(tau).values
    if not values or contains(values, PATTERN_312):
        return None
    if len(values) == 1:
        return _ONE
    if values in CATALOG:
        return CATALOG[values]
    m = len(values)
    if _is_increasing(values):
        return f_increasing(m)
    if _is_decreasing(values):
        return f_decreasing(m)
    if _is_hat(values):
        return f_hat(m)
    if values[-1] == 1:
        inner = known_closed_form(reduce_word(values[:-1]))
        if inner is not None:
            return _ONE / (_ONE - _XQ - _X * (inner - _ONE))
    return None


def rho_one(rho: Permutation | Sequence[int]) -> Permutation:
    """ρ ↦ ρ1：ρ 的每个值加一，末尾接 1。"""
    values = as_pattern(rho).values
    return Permutation(tuple(v + 1 for v in values) + (1,))


def dq_rho_one(
    rho: Permutation | Sequence[int], engine: Optional[GeneratingFunctionEngine] = None
) -> UnivariateRGF:
    """∂_q F_{ρ1} 在 q = 1 处的值：x · F_{ρ1}(x,1)² · (1 + ∂_q F_ρ|_{q=1})。"""
    engine = engine or get_default_engine()
    f_tau_q1 = at_q1(engine.f_tau(rho_one(rho)))
    inner = d_dq_at_q1(engine.f_tau(rho))
    x = UnivariateRGF((Fraction(0), Fraction(1)))
    return x * f_tau_q1 * f_tau_q1 * (1 + inner)


# ---------------------------------------------------------------------------
# E(L_n)、E(L_n²) 的精确公式
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExpectationFormula:
    """
    mean(n) = E(L_n)，second_moment(n) = E(L_n²)。

    mean_valid_from / second_moment_valid_from 之前的小 n 不满足公式。
    """

    pattern: tuple[int, ...]
    mean: Callable[[int], Fraction]
    second_moment: Callable[[int], Fraction]
    mean_valid_from: int = 1
    second_moment_valid_from: int = 1

    def mean_applies(self, n: int) -> bool:
        return n >= self.mean_valid_from

    def second_moment_applies(self, n: int) -> bool:
        return n >= self.second_moment_valid_from


def _f(n) -> Fraction:
    return Fraction(n)


def _mean_1234(n: int) -> Fraction:
    n = _f(n)
    return 3 * (n**4 - 4 * n**3 + 9 * n**2 - 6 * n + 4) / _den_1234(n)


def _second_1234(n: int) -> Fraction:
    n = _f(n)
    return 3 * (3 * n**4 - 12 * n**3 + 23 * n**2 - 14 * n + 4) / _den_1234(n)


def _den_1234(n: Fraction) -> Fraction:
    return n**4 - 4 * n**3 + 11 * n**2 - 8 * n + 12


def _den_1243(n: int) -> Fraction:
    return (n - 1) * Fraction(2) ** (n - 2) + 1


def _mean_1243(n: int) -> Fraction:
    return Fraction(2) ** (n - 3) * (n * n - n + 4) / _den_1243(n)


def _second_1243(n: int) -> Fraction:
    return Fraction(2) ** (n - 4) * (n**3 + 5 * n + 2) / _den_1243(n)


_FORMULA_132 = dict(
    mean=lambda n: Fraction(n + 1, 2),
    second_moment=lambda n: Fraction(n * (n + 3), 4),
)

EXPECTATION_FORMULAS: dict[tuple[int, ...], ExpectationFormula] = {
    _key("123"): ExpectationFormula(
        pattern=_key("123"),
        mean=lambda n: Fraction(2 * (n * n - n + 1), n * n - n + 2),
        second_moment=lambda n: Fraction(2 * (2 * n * n - 2 * n + 1), n * n - n + 2),
    ),
    _key("132"): ExpectationFormula(pattern=_key("132"), **_FORMULA_132),
    _key("213"): ExpectationFormula(pattern=_key("213"), **_FORMULA_132),
    _key("231"): ExpectationFormula(pattern=_key("231"), **_FORMULA_132),
    # n = 1 时 E = 1；n <= 2 时 E(L_n²) 也偏离公式
    _key("321"): ExpectationFormula(
        pattern=_key("321"),
        mean=lambda n: Fraction(3 * n, 4),
        second_moment=lambda n: Fraction(n * (9 * n + 1), 16),
        mean_valid_from=2,
        second_moment_valid_from=3,
    ),
    _key("1234"): ExpectationFormula(pattern=_key("1234"), mean=_mean_1234, second_moment=_second_1234),
    _key("1243"): ExpectationFormula(pattern=_key("1243"), mean=_mean_1243, second_moment=_second_1243),
}


def expectation_formula(tau: Permutation | Sequence[int]) -> Optional[ExpectationFormula]:
    return EXPECTATION_FORMULAS.get(as_pattern(tau).values)


__all__ = [
    "CATALOG",
    "known_closed_form",
    "rho_one",
    "dq_rho_one",
    "ExpectationFormula",
    "EXPECTATION_FORMULAS",
    "expectation_formula",
]


if __name__ == "__main__":
    engine = get_default_engine()
    for key in sorted(CATALOG):
        ok = engine.f_tau(key).equals(CATALOG[key])
        print(Permutation(key), "一致" if ok else "不一致")
