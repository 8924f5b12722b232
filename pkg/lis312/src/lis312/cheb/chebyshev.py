"""
第二类 Chebyshev 多项式 U_m 及其有理化版本 P_k(x, q)、Q_k(x)。

- U_m = 2t U_{m-1} - U_{m-2}，U_0 = 1，U_1 = 2t，延拓 U_{-1} = 0，U_{-2} = -1；
- P_{-1} = 0，P_0 = 1，P_k = (1 + x - xq) P_{k-1} - x P_{k-2}；
- Q_k = P_k(x, 1)，即 Q_k = Q_{k-1} - x Q_{k-2}。

P_k(x, q) = (√x)^k U_k((1 + x - xq) / (2√x))，奇次 √x 相互抵消。
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import mpmath
from sympy import chebyshevu_poly
from sympy.polys.rings import PolyElement

from lis312.algebra.polynomial import UNIVARIATE_RING, UNIVARIATE_X, BivariatePolynomial
from lis312.algebra.render import render_terms
from lis312.errors import InvalidInputError
from lis312.utils.logger_handler import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ChebPoly:
    """U_m 的整系数表示，coefficients[i] 为 t^i 的系数。"""

    index: int
    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def to_text(self) -> str:
        text = render_terms(((i, 0), Fraction(c)) for i, c in enumerate(self.coefficients) if c)
        return text.replace("x", "t")


@lru_cache(maxsize=None)
def cheb_u(m: int) -> ChebPoly:
    """U_m(t)，m >= -2。"""
    if m < -2:
        raise InvalidInputError(f"cheb_u 要求 m >= -2，实际为 {m}")
    if m == -2:
        return ChebPoly(-2, (-1,))
    if m == -1:
        return ChebPoly(-1, ())
    # all_coeffs 按次数从高到低
    coefficients = chebyshevu_poly(m, polys=True).all_coeffs()
    return ChebPoly(m, tuple(int(c) for c in reversed(coefficients)))


def cheb_u_value(m: int, t):
    """按递推直接求 U_m(t) 的数值（t 可为 mpf / Fraction）。"""
    if m == -2:
        return -1
    if m == -1:
        return 0
    a, b = 0, 1  # U_{-1}, U_0
    for _ in range(m):
        a, b = b, 2 * t * b - a
    return b


def cheb_product_check(
    n: int,
    t0,
    *,
    precision_bits: int = 128,
    rel_tol_exponent: int = 30,
) -> bool:
    """
    数值校验 U_n(t) = 2^n Π_{j=1..n} (t - cos(jπ/(n+1)))。

    误差以右边各因子绝对值之积为尺度，避免 t0 靠近零点时相对误差失真。
    """
    if n < 1:
        raise InvalidInputError(f"cheb_product_check 要求 n >= 1，实际为 {n}")
    with mpmath.workprec(precision_bits):
        t = mpmath.mpf(t0) if not isinstance(t0, Fraction) else mpmath.mpf(t0.numerator) / t0.denominator
        lhs = cheb_u_value(n, t)
        rhs = mpmath.mpf(2) ** n
        scale = mpmath.mpf(2) ** n
        for j in range(1, n + 1):
            root = mpmath.cos(j * mpmath.pi / (n + 1))
            rhs *= t - root
            scale *= abs(t) + abs(root)
        ok = abs(lhs - rhs) <= mpmath.mpf(10) ** (-rel_tol_exponent) * scale
    if not ok:
        logger.error(f"Chebyshev 乘积公式校验失败: n={n}, t0={t0}")
    return bool(ok)


# ---------------------------------------------------------------------------
# 有理化核 P_k / Q_k
# ---------------------------------------------------------------------------

_KERNEL_STEP = BivariatePolynomial({(0, 0): 1, (1, 0): 1, (1, 1): -1})
_X = BivariatePolynomial.x()


@lru_cache(maxsize=None)
def kernel_p(k: int) -> BivariatePolynomial:
    """P_k(x, q)，k >= -1。"""
    if k < -1:
        raise InvalidInputError(f"kernel_p 要求 k >= -1，实际为 {k}")
    if k == -1:
        return BivariatePolynomial.zero()
    if k == 0:
        return BivariatePolynomial.one()
    return _KERNEL_STEP * kernel_p(k - 1) - _X * kernel_p(k - 2)


@lru_cache(maxsize=None)
def kernel_q(k: int) -> PolyElement:
    """Q_k(x) = P_k(x, 1)，k >= -1。"""
    if k < -1:
        raise InvalidInputError(f"kernel_q 要求 k >= -1，实际为 {k}")
    if k == -1:
        return UNIVARIATE_RING.zero
    if k == 0:
        return UNIVARIATE_RING.one
    return kernel_q(k - 1) - UNIVARIATE_X * kernel_q(k - 2)


@dataclass(frozen=True)
class RationalizedKernel:
    """P_{-1} … P_K 与 Q_{-1} … Q_K 的快照。"""

    K: int
    p: tuple[BivariatePolynomial, ...]
    q: tuple[PolyElement, ...]

    @classmethod
    def build(cls, K: int) -> "RationalizedKernel":
        ks = range(-1, K + 1)
        return cls(K=K, p=tuple(kernel_p(k) for k in ks), q=tuple(kernel_q(k) for k in ks))

    def p_at(self, k: int) -> BivariatePolynomial:
        return self.p[k + 1]

    def q_at(self, k: int) -> PolyElement:
        return self.q[k + 1]


def rationalization_certificate(k: int, *, samples: Optional[int] = None, seed: int = 312) -> bool:
    """
    在 (deg+1)^2 个随机有理点 (x0 = r^2, q0) 上精确验证
    P_k(x0, q0) = r^k U_k((1 + x0 - x0 q0) / (2r))。
    """
    rng = random.Random(seed)
    p = kernel_p(k)
    u = cheb_u(k)
    count = samples if samples is not None else (max(p.total_degree, 0) + 1) ** 2
    for _ in range(count):
        r = Fraction(rng.randint(1, 40), rng.randint(1, 40))
        q0 = Fraction(rng.randint(-30, 30), rng.randint(1, 30))
        x0 = r * r
        lhs = p.eval(x0, q0)
        rhs = r**k * u((1 + x0 - x0 * q0) / (2 * r)) if k >= 0 else Fraction(0)
        if lhs != rhs:
            logger.error(f"有理化校验失败: k={k}, x0={x0}, q0={q0}")
            return False
    return True


__all__ = [
    "ChebPoly",
    "cheb_u",
    "cheb_u_value",
    "cheb_product_check",
    "kernel_p",
    "kernel_q",
    "RationalizedKernel",
    "rationalization_certificate",
]


if __name__ == "__main__":
    for m in range(5):
        print(f"U_{m} =", cheb_u(m).to_text())
    print("P_3 =", kernel_p(3))
    print("乘积公式 n=3, t=0.7:", cheb_product_check(3, mpmath.mpf("0.7")))
