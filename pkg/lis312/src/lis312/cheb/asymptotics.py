"""
渐近分析：增长率、期望斜率 E(L_n)/n 的极限，以及 Catalan / Narayana 数。

- 增长率：用 sympy 的 Poly.intervals 精确隔离 q=1 处分母的最小正根 ρ，给出 1/ρ 的有理区间；
- 主导极点必须唯一：分母若还有别的根与 ρ 同模，抛 NoDominantSingularityError；
- 递减 / 帽子模式的斜率：在 c = cos(π/(m+1)) 处用 mpmath 高精度求 U_j(c) 的封闭公式；
- 任意模式：读出 [x^n]F(x,1) 与 [x^n]∂_qF(x,1) 在主导极点处的首项，二者之比即斜率；
- 递增模式 12…m：s_n ~ c_{m-2} n^{2m-4} / (2m-4)!，E(L_n) → m-1。
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath
from sympy import Poly, Rational
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement

from lis312.algebra.polynomial import UNIVARIATE_RING, UNIVARIATE_X, x_coefficients, x_poly
from lis312.algebra.rational import RationalGF, UnivariateRGF, at_q1, d_dq_at_q1
from lis312.cheb.chebyshev import cheb_u_value
from lis312.errors import InvalidInputError, NoDominantSingularityError
from lis312.utils.config_handler import ChebConfig, load_cheb_config
from lis312.utils.logger_handler import get_logger

logger = get_logger(__name__)


# ---------------------------------------------------------------------------
# Catalan / Narayana
# ---------------------------------------------------------------------------


def catalan(n: int) -> int:
    if n < 0:
        raise InvalidInputError(f"catalan 要求 n >= 0，实际为 {n}")
    return math.comb(2 * n, n) // (n + 1)


def narayana(n: int, k: int) -> int:
    """N(n, k) = C(n, k) C(n, k-1) / n，1 <= k <= n 之外为 0（N(0, 0) = 1）。"""
    if n == 0 and k == 0:
        return 1
    if n < 1 or k < 1 or k > n:
        return 0
    return math.comb(n, k) * math.comb(n, k - 1) // n


# ---------------------------------------------------------------------------
# 数值工具
# ---------------------------------------------------------------------------


def _config(config: Optional[ChebConfig]) -> ChebConfig:
    return config or load_cheb_config()


def to_mpf(value) -> mpmath.mpf:
    if isinstance(value, Fraction):
        return mpmath.mpf(value.numerator) / value.denominator
    return mpmath.mpf(value)


def _mp_eval(p: PolyElement, t: mpmath.mpf) -> mpmath.mpf:
    coeffs = [to_mpf(c) for c in reversed(x_coefficients(p))]
    return mpmath.polyval(coeffs, t) if coeffs else mpmath.mpf(0)


# ---------------------------------------------------------------------------
# 精确根隔离（sympy Poly）
# ---------------------------------------------------------------------------

_X_SYMBOL = UNIVARIATE_RING.symbols[0]


def _as_poly(p: PolyElement) -> Poly:
    return Poly(p.as_expr(), _X_SYMBOL, domain=QQ)


def _rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def _fraction(value: Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def isolate_smallest_positive_root(
    p: PolyElement, width: Fraction, *, reciprocal: bool = False
) -> tuple[Fraction, Fraction]:
    """
    返回闭区间 [lo, hi]，宽度 < width，内含 p 的最小正根 ρ。

    reciprocal=True 时改为隔离 x^d p(1/x) 的最大正根，区间直接包含 1/ρ。
    """
    poly = _as_poly(p)
    if reciprocal:
        poly = Poly(list(reversed(poly.all_coeffs())), _X_SYMBOL, domain=QQ)
    if poly.degree() < 1:
        raise NoDominantSingularityError("多项式没有正实根")
    found = []
    for (s, t), _ in poly.intervals(eps=_rational(width)):
        lo, hi = _fraction(s), _fraction(t)
        if hi > 0 and lo >= 0:
            found.append((lo, hi))
    if not found:
        raise NoDominantSingularityError("多项式没有正实根")
    return max(found) if reciprocal else min(found)


@dataclass(frozen=True)
class RealInterval:
    """有理端点的实区间 [lo, hi]。"""

    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value) -> bool:
        if isinstance(value, (int, Fraction)):
            return self.lo <= value <= self.hi
        return to_mpf(self.lo) <= value <= to_mpf(self.hi)

    def to_mpf(self) -> mpmath.mpf:
        return to_mpf(self.midpoint)

    def __str__(self) -> str:
        return f"[{mpmath.nstr(to_mpf(self.lo), 25)}, {mpmath.nstr(to_mpf(self.hi), 25)}]"


# ---------------------------------------------------------------------------
# 增长率与主导极点
# ---------------------------------------------------------------------------


def growth_rate(G: UnivariateRGF, *, config: Optional[ChebConfig] = None) -> RealInterval:
    """
    返回包含 1/ρ 的区间，宽度 < 10^-k（k 见 cheb.yml），ρ 为 G 分母的最小正根。

    分母无正实根时抛 NoDominantSingularityError。
    """
    cfg = _config(config)
    lo, hi = isolate_smallest_positive_root(G.den, cfg.root_width, reciprocal=True)
    logger.debug(f"增长率 1/ρ ∈ [{lo}, {hi}]，G = {G}")
    return RealInterval(lo, hi)


@dataclass(frozen=True)
class PoleTerm:
    """[x^n]G ~ constant · n^{order-1} · ρ^{-n}。"""

    rho: mpmath.mpf
    order: int
    constant: mpmath.mpf

    @property
    def growth(self) -> mpmath.mpf:
        return 1 / self.rho


def _pole_order(den: PolyElement, lo: Fraction, hi: Fraction) -> tuple[int, Optional[Poly]]:
    """ρ 在 den 中的重数以及含 ρ 的无平方因子；ρ 不是根时返回 (0, None)。"""
    _, factors = _as_poly(den).sqf_list()
    for factor, multiplicity in factors:
        if factor.count_roots(_rational(lo), _rational(hi)) >= 1:
            return multiplicity, factor
    return 0, None


def _polish(factor: Poly, lo: Fraction, hi: Fraction) -> mpmath.mpf:
    """在隔离区间内把根精化到当前工作精度。"""
    coeffs = [_fraction(c) for c in factor.all_coeffs()]
    if len(coeffs) == 2:
        return to_mpf(-coeffs[1] / coeffs[0])
    for end in (lo, hi):
        if factor.eval(_rational(end)) == 0:
            return to_mpf(end)
    values = [to_mpf(c) for c in coeffs]
    return mpmath.findroot(lambda t: mpmath.polyval(values, t), (to_mpf(lo), to_mpf(hi)), solver="anderson")


def _require_unique_modulus(den: PolyElement, rho: mpmath.mpf) -> None:
    """ρ 之外的分母根都不在圆 |x| = ρ 上。"""
    coeffs = [to_mpf(_fraction(c)) for c in _as_poly(den).sqf_part().all_coeffs()]
    if len(coeffs) <= 2:
        return
    tol = mpmath.mpf(2) ** (-(mpmath.mp.prec // 2)) * max(rho, 1)
    roots = mpmath.polyroots(coeffs, maxsteps=200, extraprec=mpmath.mp.prec)
    for root in roots:
        if abs(root - rho) > tol and abs(abs(root) - rho) <= tol:
            raise NoDominantSingularityError(
                f"根 {mpmath.nstr(root, 15)} 与 ρ ≈ {mpmath.nstr(rho, 15)} 同模，主导奇点不唯一"
            )


def _leading_term(G: UnivariateRGF, lo: Fraction, hi: Fraction) -> Optional[PoleTerm]:
    k, factor = _pole_order(G.den, lo, hi)
    if k == 0:
        return None
    rho = _polish(factor, lo, hi)
    _require_unique_modulus(G.den, rho)
    dk = G.den
    for _ in range(k):
        dk = dk.diff(UNIVARIATE_X)
    residue = _mp_eval(G.num, rho) * math.factorial(k) / (_mp_eval(dk, rho) * (-rho) ** k)
    return PoleTerm(rho=rho, order=k, constant=residue / math.factorial(k - 1))


def dominant_pole_term(G: UnivariateRGF, *, config: Optional[ChebConfig] = None) -> PoleTerm:
    """G 在最小正极点处的首项渐近；另有同模的根时抛 NoDominantSingularityError。"""
    cfg = _config(config)
    with mpmath.workprec(cfg.float_precision_bits):
        lo, hi = isolate_smallest_positive_root(G.den, cfg.root_width)
        term = _leading_term(G, lo, hi)
    if term is None:
        raise NoDominantSingularityError(f"分母没有正实根: {G}")
    return term

@dataclass(frozen=True)
class PatternAsymptotics:
    """
    s_n ~ count.constant · n^{count.order-1} · growth^n；
    E(L_n) ~ mean_constant · n^{mean_exponent}。
    """

    count: PoleTerm
    mean_exponent: int
    mean_constant: mpmath.mpf

    @property
    def growth(self) -> mpmath.mpf:
        return self.count.growth

    @property
    def slope(self) -> mpmath.mpf:
        """E(L_n)/n 的极限；E(L_n) 有界时为 0。"""
        if self.mean_exponent >= 1:
            return self.mean_constant
        return mpmath.mpf(0)


def pattern_asymptotics(F: RationalGF, *, config: Optional[ChebConfig] = None) -> PatternAsymptotics:
    """
    由 F(x, q) 读出计数与期望的首项渐近。

    ∂_qF(x,1) 的极点都是 F(x,1) 的极点，因此两者共用同一个隔离区间。
    """
    cfg = _config(config)
    counts = at_q1(F)
    weighted = d_dq_at_q1(F)
    with mpmath.workprec(cfg.float_precision_bits):
        lo, hi = isolate_smallest_positive_root(counts.den, cfg.root_width)
        count_term = _leading_term(counts, lo, hi)
        mean_term = _leading_term(weighted, lo, hi)
        if count_term is None:
            raise NoDominantSingularityError(f"F(x,1) 没有正实极点: {counts}")
        if mean_term is None:
            return PatternAsymptotics(count=count_term, mean_exponent=0, mean_constant=mpmath.mpf(0))
        result = PatternAsymptotics(
            count=count_term,
            mean_exponent=mean_term.order - count_term.order,
            mean_constant=mean_term.constant / count_term.constant,
        )
    logger.debug(
        f"ρ ≈ {mpmath.nstr(count_term.rho, 20)}，计数极点阶 {count_term.order}，"
        f"期望 ~ {mpmath.nstr(result.mean_constant, 15)} n^{result.mean_exponent}"
    )
    return result


def pattern_slope(target, *, config: Optional[ChebConfig] = None) -> mpmath.mpf:
    """任意避开 312 的模式（或其 F_τ）的 lim E(L_n)/n。"""
    if isinstance(target, RationalGF):
        F = target
    else:
        from lis312.gf.engine import f_tau

        F = f_tau(target)
    return pattern_asymptotics(F, config=config).slope


# ---------------------------------------------------------------------------
# 递减 / 帽子模式的封闭斜率
# ---------------------------------------------------------------------------


def _cheb_data(m: int):
    """返回 c = cos(π/(m+1))，U_1(c) … U_{m-1}(c) 与 Π_{j=2}^{m-1} (c - cos(jπ/(m+1)))。"""
    c = mpmath.cos(mpmath.pi / (m + 1))
    values = {j: cheb_u_value(j, c) for j in range(1, m)}
    product = mpmath.mpf(1)
    for j in range(2, m):
        product *= c - mpmath.cos(j * mpmath.pi / (m + 1))
    return c, values, product


def _slope_from(m: int, numerator_of, config: Optional[ChebConfig]) -> mpmath.mpf:
    cfg = _config(config)
    with mpmath.workprec(cfg.float_precision_bits):
        c, u, product = _cheb_data(m)
        numerator = numerator_of(u)
        denominator = mpmath.mpf(2) ** (m + 1) * c**3 * u[m - 1] * product
        return +(numerator / denominator)


def slope_decreasing(m: int, *, config: Optional[ChebConfig] = None) -> mpmath.mpf:
    """m(m-1)…1：Σ_{j=1}^{m-1} U_j(c)² / (2^{m+1} c³ U_{m-1}(c) Π)。"""
    if m < 2:
        raise InvalidInputError(f"slope_decreasing 要求 m >= 2，实际为 {m}")
    return _slope_from(m, lambda u: mpmath.fsum(u[j] ** 2 for j in range(1, m)), config)


def slope_hat(m: int, *, config: Optional[ChebConfig] = None) -> mpmath.mpf:
    """(m-1)m(m-2)…1：分子为 U_2(c) + Σ_{j=2}^{m-1} U_j(c)²，分母同递减模式。"""
    if m < 4:
        raise InvalidInputError(f"slope_hat 要求 m >= 4，实际为 {m}")
    return _slope_from(m, lambda u: u[2] + mpmath.fsum(u[j] ** 2 for j in range(2, m)), config)


def slope_hat_with_u1_term(m: int, *, config: Optional[ChebConfig] = None) -> mpmath.mpf:
    """分子多出 U_1(c)² 的版本，用于与 slope_hat、级数估计对照。"""
    if m < 4:
        raise InvalidInputError(f"slope_hat_with_u1_term 要求 m >= 4，实际为 {m}")
    return _slope_from(m, lambda u: u[2] + mpmath.fsum(u[j] ** 2 for j in range(1, m)), config)


def alpha_constants(m: int, *, config: Optional[ChebConfig] = None) -> tuple[mpmath.mpf, mpmath.mpf]:
    """
    (α_m, α̃_m)：[x^n]∂_qF(x,1) ~ α_m n (4c²)^n，[x^n]F(x,1) ~ α̃_m (4c²)^n。

    α_m = Σ U_j² / (4^m c⁴ Π²)，α̃_m = U_{m-1} / (2^{m-1} c Π)。
    """
    if m < 2:
        raise InvalidInputError(f"alpha_constants 要求 m >= 2，实际为 {m}")
    cfg = _config(config)
    with mpmath.workprec(cfg.float_precision_bits):
        c, u, product = _cheb_data(m)
        squares = mpmath.fsum(u[j] ** 2 for j in range(1, m))
        alpha = squares / (mpmath.mpf(4) ** m * c**4 * product**2)
        alpha_tilde = u[m - 1] / (mpmath.mpf(2) ** (m - 1) * c * product)
        return +alpha, +alpha_tilde


def decreasing_growth(m: int, *, config: Optional[ChebConfig] = None) -> mpmath.mpf:
    """4cos²(π/(m+1))。"""
    cfg = _config(config)
    with mpmath.workprec(cfg.float_precision_bits):
        return +(4 * mpmath.cos(mpmath.pi / (m + 1)) ** 2)


# ---------------------------------------------------------------------------
# 递增模式
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IncreasingAsymptotics:
    """s_n ~ lead_coefficient · n^power，E(L_n) → expected_limit。"""

    m: int
    lead_coefficient: Fraction
    power: int
    expected_limit: int

    def count_ratio(self, n: int, s_n: int) -> Fraction:
        """s_n / (lead_coefficient · n^power)，n → ∞ 时趋于 1。"""
        return Fraction(s_n) / (self.lead_coefficient * n**self.power)


def increasing_asymptotics(m: int) -> IncreasingAsymptotics:
    if m < 3:
        raise InvalidInputError(f"increasing_asymptotics 要求 m >= 3，实际为 {m}")
    power = 2 * m - 4
    return IncreasingAsymptotics(
        m=m,
        lead_coefficient=Fraction(catalan(m - 2), math.factorial(power)),
        power=power,
        expected_limit=m - 1,
    )


# ---------------------------------------------------------------------------
# 2341 一行的三次方程
# ---------------------------------------------------------------------------

# a³ - 4a² + 5a - 3
TABLE4_CUBIC: PolyElement = x_poly((-3, 5, -4, 1))


def table4_cubic_root(*, config: Optional[ChebConfig] = None) -> RealInterval:
    """a³ - 4a² + 5a - 3 = 0 的唯一实根（≈ 2.4655712）所在区间。"""
    cfg = _config(config)
    lo, hi = isolate_smallest_positive_root(TABLE4_CUBIC, cfg.root_width)
    logger.debug(f"三次方程实根 ∈ [{lo}, {hi}]")
    return RealInterval(lo, hi)


def table4_cubic_slope(*, config: Optional[ChebConfig] = None) -> mpmath.mpf:
    """(-5a² + 22a - 9) / 31。"""
    cfg = _config(config)
    root = table4_cubic_root(config=cfg)
    with mpmath.workprec(cfg.float_precision_bits):
        a = _polish(_as_poly(TABLE4_CUBIC), root.lo, root.hi)
        return +((-5 * a**2 + 22 * a - 9) / 31)



__all__ = [
    "catalan",
    "narayana",
    "to_mpf",
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
    "TABLE4_CUBIC",
    "table4_cubic_root",
    "table4_cubic_slope",
]


if __name__ == "__main__":
    for m in range(2, 7):
        print(f"m={m}: slope_dec = {mpmath.nstr(slope_decreasing(m), 15)}")
    print("slope_hat(4) =", mpmath.nstr(slope_hat(4), 15))
    print("cubic root  =", table4_cubic_root())
    print("cubic slope =", mpmath.nstr(table4_cubic_slope(), 15))
