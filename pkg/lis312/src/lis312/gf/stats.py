"""
由 F_τ(x, q) 导出逐 n 的精确统计量：

    s_n        = [x^n] F(x, 1)
    E(L_n)     = [x^n] ∂_q F(x, 1) / s_n
    E(L_n²)    = [x^n] (∂²_q F + ∂_q F)(x, 1) / s_n
    分布        = series(F, n_max) 的第 n 行

s_n = 0 时均值、二阶矩、方差记为 None。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from lis312.algebra.rational import RationalGF, at_q1, d2_dq2_at_q1, d_dq_at_q1
from lis312.algebra.series import coeffs_by_recurrence, series
from lis312.errors import InvalidInputError
from lis312.gf.engine import GeneratingFunctionEngine, as_pattern, get_default_engine
from lis312.perm.permutation import Permutation
from lis312.utils.logger_handler import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class StatRow:
    n: int
    count: int
    mean: Optional[Fraction]
    second_moment: Optional[Fraction]
    # 走线性递推时不展开二元级数，分布为 None
    distribution: Optional[dict[int, int]] = None

    @property
    def variance(self) -> Optional[Fraction]:
        if self.mean is None or self.second_moment is None:
            return None
        return self.second_moment - self.mean**2


@dataclass(frozen=True)
class StatSeries:
    tau: Permutation
    rows: tuple[StatRow, ...] = field(default_factory=tuple)

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def row(self, n: int) -> StatRow:
        return self.rows[n]

    def counts(self) -> list[int]:
        return [r.count for r in self.rows]

    def means(self) -> list[Optional[Fraction]]:
        return [r.mean for r in self.rows]


def _as_int(c: Fraction, what: str) -> int:
    if c.denominator != 1 or c < 0:
        raise ArithmeticError(f"{what} 不是非负整数: {c}")
    return int(c)


def _moment_coefficients(F: RationalGF, n_max: int) -> tuple[list[Fraction], list[Fraction], list[Fraction]]:
    counts = coeffs_by_recurrence(at_q1(F), n_max)
    first = coeffs_by_recurrence(d_dq_at_q1(F), n_max)
    second = coeffs_by_recurrence(d2_dq2_at_q1(F), n_max)
    return counts, first, second


def _row(n: int, s: Fraction, first: Fraction, second: Fraction, distribution: Optional[dict[int, int]]) -> StatRow:
    count = _as_int(s, f"s_{n}")
    if count == 0:
        return StatRow(n=n, count=0, mean=None, second_moment=None, distribution=distribution)
    return StatRow(
        n=n,
        count=count,
        mean=first / count,
        second_moment=(second + first) / count,
        distribution=distribution,
    )


def _distribution(row: Sequence[Fraction], n: int) -> dict[int, int]:
    return {k: _as_int(c, f"[x^{n} q^{k}]") for k, c in enumerate(row) if c != 0}


def stats(
    tau: Permutation | Sequence[int],
    n_max: int,
    *,
    engine: Optional[GeneratingFunctionEngine] = None,
) -> StatSeries:
    """n = 0 … n_max 的统计表；n_max 超过 series_switch_n 时只给矩，不给分布。"""
    if n_max < 0:
        raise InvalidInputError(f"n_max 必须非负，实际为 {n_max}")
    engine = engine or get_default_engine()
    tau = as_pattern(tau)
    F = engine.f_tau(tau)
    counts, first, second = _moment_coefficients(F, n_max)

    table = None
    if n_max <= engine.config.series_switch_n:
        table = series(F, n_max)
    else:
        logger.info(f"n_max={n_max} 超过 {engine.config.series_switch_n}，只用线性递推求矩")

    rows = tuple(
        _row(n, counts[n], first[n], second[n], _distribution(table[n], n) if table is not None else None)
        for n in range(n_max + 1)
    )
    return StatSeries(tau=tau, rows=rows)


def moments_at(
    tau: Permutation | Sequence[int],
    n: int,
    *,
    engine: Optional[GeneratingFunctionEngine] = None,
) -> StatRow:
    """单个 n 的 s_n、E(L_n)、E(L_n²)，适合 n 很大的情形。"""
    if n < 0:
        raise InvalidInputError(f"n 必须非负，实际为 {n}")
    engine = engine or get_default_engine()
    counts, first, second = _moment_coefficients(engine.f_tau(tau), n)
    return _row(n, counts[n], first[n], second[n], None)


def lis_distribution(
    tau: Permutation | Sequence[int],
    n: int,
    *,
    engine: Optional[GeneratingFunctionEngine] = None,
) -> dict[int, int]:
    """S_n(312, τ) 中 LIS 恰为 k 的排列数，只列出非零项。"""
    if n < 0:
        raise InvalidInputError(f"n 必须非负，实际为 {n}")
    engine = engine or get_default_engine()
    table = series(engine.f_tau(tau), n)
    return _distribution(table[n], n)


__all__ = ["StatRow", "StatSeries", "stats", "moments_at", "lis_distribution"]


if __name__ == "__main__":
    for row in stats((3, 2, 1), 6).rows:
        print(row.n, row.count, row.mean, row.second_moment, row.distribution)
