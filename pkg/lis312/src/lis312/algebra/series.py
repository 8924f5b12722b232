"""
有理函数的幂级数展开。

- series(F, N)：二元展开，a[n][k] = [x^n q^k] F，0 <= n, k <= N；
- coeffs_by_recurrence(G, N)：一元展开，利用分母诱导的常系数线性递推，O(N * deg Q)。
"""

from __future__ import annotations

from fractions import Fraction

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from sympy.polys.rings import PolyElement, ring

from lis312.algebra.polynomial import BivariatePolynomial, to_fraction, x_coefficients
from lis312.algebra.rational import RationalGF, UnivariateRGF

SeriesTable = list[list[Fraction]]

_Q_RING, _Q = ring("q", QQ)


def _q_rows(p: BivariatePolynomial) -> list[PolyElement]:
    """rows[i] 为 x^i 的系数，是 QQ[q] 的元素。"""
    rows: list[dict] = [{} for _ in range(p.deg_x + 1)]
    for (i, j), c in p.element.items():
        rows[i][(j,)] = c
    return [_Q_RING.from_dict(r) for r in rows]


def series(F: RationalGF, N: int) -> SeriesTable:
    """
    返回 (N+1) x (N+1) 的表 a，a[n][k] = [x^n q^k] F。

    按 x 逐阶做长除法，每一阶的系数是截断到 q^N 的 q-级数。
    """
    prec = N + 1
    num_rows = _q_rows(F.num)
    den_rows = _q_rows(F.den)
    # den(0, 0) = 1，所以 den(0, q) 可以按 q 求逆
    inv0 = rs_series_inversion(den_rows[0], _Q, prec)

    rows: list[PolyElement] = []
    for n in range(prec):
        acc = num_rows[n] if n < len(num_rows) else _Q_RING.zero
        for i in range(1, min(n, len(den_rows) - 1) + 1):
            if den_rows[i]:
                acc = acc - rs_mul(den_rows[i], rows[n - i], _Q, prec)
        rows.append(rs_mul(acc, inv0, _Q, prec))
    return [[to_fraction(row.get((k,), QQ.zero)) for k in range(prec)] for row in rows]


def coeffs_by_recurrence(G: UnivariateRGF, N: int) -> list[Fraction]:
    """
    c_0 … c_N，满足 Σ_i den_i c_{n-i} = num_n（den_0 = 1）。
    """
    num, den = x_coefficients(G.num), x_coefficients(G.den)
    coeffs: list[Fraction] = []
    taps = [(i, d) for i, d in enumerate(den) if i > 0 and d != 0]
    for n in range(N + 1):
        value = num[n] if n < len(num) else Fraction(0)
        for i, d in taps:
            if i > n:
                break
            value -= d * coeffs[n - i]
        coeffs.append(value)
    return coeffs


__all__ = ["SeriesTable", "series", "coeffs_by_recurrence"]
