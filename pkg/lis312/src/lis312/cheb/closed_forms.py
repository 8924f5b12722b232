"""
递减模式 m(m-1)…1、帽子模式 (m-1)m(m-2)…1 与递增模式 12…m 的封闭形式。

含 √x 的原始表达式乘以 √x^{m-1} 后，用 P_k / Q_k 写成 x、q 的有理函数：

    F_{m…1}        = (P_{m-2} - x P_{m-3}) / (P_{m-1} - x P_{m-2})
    F_{(m-1)m…1}   = ((1-x) P_{m-3} - x(1-x+xq) P_{m-4})
                     / ((1-x) P_{m-2} - x(1-x+xq) P_{m-3})
    ∂_q F_{m…1}|_{q=1}      = Σ_{j=1}^{m-1} x^{m-j} Q_j² / Q_m²
    ∂_q F_{(m-1)m…1}|_{q=1} = (x^{m-1} Q_2 + Σ_{j=2}^{m-1} x^{m-j} Q_j²) / Q_m²

其中用到 U_j(1/(2√x)) = Q_j / √x^j。
"""

from __future__ import annotations

from sympy.polys.rings import PolyElement

from lis312.algebra.polynomial import UNIVARIATE_RING, UNIVARIATE_X, BivariatePolynomial
from lis312.algebra.rational import RationalGF, UnivariateRGF
from lis312.cheb.asymptotics import narayana
from lis312.cheb.chebyshev import kernel_p, kernel_q
from lis312.errors import InvalidInputError

_X = BivariatePolynomial.x()
_Q = BivariatePolynomial.q()
_ONE_MINUS_X = BivariatePolynomial.one() - _X
# 1 - x + xq
_HAT_WEIGHT = _ONE_MINUS_X + _X * _Q


def _require(m: int, lowest: int, name: str) -> None:
    if m < lowest:
        raise InvalidInputError(f"{name} 要求 m >= {lowest}，实际为 {m}")


def f_decreasing(m: int) -> RationalGF:
    """F_{m(m-1)…1}(x, q)。"""
    _require(m, 1, "f_decreasing")
    if m == 1:
        return RationalGF.one()
    num = kernel_p(m - 2) - _X * kernel_p(m - 3)
    den = kernel_p(m - 1) - _X * kernel_p(m - 2)
    return RationalGF(num, den)


def f_hat(m: int) -> RationalGF:
    """F_{(m-1)m(m-2)…1}(x, q)，m >= 3。"""
    _require(m, 3, "f_hat")
    num = _ONE_MINUS_X * kernel_p(m - 3) - _X * _HAT_WEIGHT * kernel_p(m - 4)
    den = _ONE_MINUS_X * kernel_p(m - 2) - _X * _HAT_WEIGHT * kernel_p(m - 3)
    return RationalGF(num, den)


def _weighted_square_sum(m: int, start: int) -> PolyElement:
    """Σ_{j=start}^{m-1} x^{m-j} Q_j²。"""
    total = UNIVARIATE_RING.zero
    for j in range(start, m):
        total = total + UNIVARIATE_X ** (m - j) * kernel_q(j) ** 2
    return total


def dq_decreasing_closed(m: int) -> UnivariateRGF:
    """∂_q F_{m…1} 在 q = 1 处的封闭形式；m = 1 时为 0。"""
    _require(m, 1, "dq_decreasing_closed")
    qm = kernel_q(m)
    return UnivariateRGF(_weighted_square_sum(m, 1), qm**2)


def dq_hat_closed(m: int) -> UnivariateRGF:
    """∂_q F_{(m-1)m…1} 在 q = 1 处的封闭形式，m >= 4。"""
    _require(m, 4, "dq_hat_closed")
    qm = kernel_q(m)
    num = UNIVARIATE_X ** (m - 1) * kernel_q(2) + _weighted_square_sum(m, 2)
    return UnivariateRGF(num, qm**2)


def dq_hat_with_u1_term(m: int) -> UnivariateRGF:
    """
    把 U_1² 也计入求和（j 从 1 开始）的版本，与 dq_hat_closed 对照用。

    二者相差 x^{m-1} / Q_m²，只有一个能与引擎结果一致。
    """
    _require(m, 4, "dq_hat_with_u1_term")
    qm = kernel_q(m)
    num = UNIVARIATE_X ** (m - 1) * kernel_q(2) + _weighted_square_sum(m, 1)
    return UnivariateRGF(num, qm**2)


def f_increasing(m: int) -> RationalGF:
    """
    F_{12…m}(x, q) = 1 + qx/(1-x)
        + Σ_{j=2}^{m-1} q^j x^j / (1-x)^{2j-1} · Σ_{k=1}^{j-1} N(j-1, k) x^{k-1}，

    N 为 Narayana 数。m = 1 时类为空（长度 >= 1 的排列都含 1），F = 1。
    """
    _require(m, 1, "f_increasing")
    if m == 1:
        return RationalGF.one()
    one_minus_x = RationalGF(_ONE_MINUS_X)
    total = RationalGF.one() + RationalGF(_Q * _X) / one_minus_x
    for j in range(2, m):
        inner = BivariatePolynomial({(k - 1, 0): narayana(j - 1, k) for k in range(1, j)})
        lead = BivariatePolynomial.monomial(j, j)
        total = total + RationalGF(lead * inner) / one_minus_x ** (2 * j - 1)
    return total


def at_q1_decreasing(m: int) -> UnivariateRGF:
    """F_{m…1}(x, 1) = (Q_{m-2} - x Q_{m-3}) / (Q_{m-1} - x Q_{m-2})，m >= 2。"""
    _require(m, 2, "at_q1_decreasing")
    num = kernel_q(m - 2) - UNIVARIATE_X * kernel_q(m - 3)
    den = kernel_q(m - 1) - UNIVARIATE_X * kernel_q(m - 2)
    return UnivariateRGF(num, den)


__all__ = [
    "f_decreasing",
    "f_hat",
    "f_increasing",
    "dq_decreasing_closed",
    "dq_hat_closed",
    "dq_hat_with_u1_term",
    "at_q1_decreasing",
]


if __name__ == "__main__":
    for m in range(2, 6):
        print(f"F_dec({m}) =", f_decreasing(m))
    for m in range(3, 6):
        print(f"F_hat({m}) =", f_hat(m))
    print("F_12345 =", f_increasing(5))
    print("dq_dec(3) =", dq_decreasing_closed(3))
