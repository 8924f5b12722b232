"""
把暴力枚举得到的 LIS 直方图与 series(F_τ, n_max) 逐行比对。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from lis312.algebra.series import series
from lis312.errors import EnumerationCapError
from lis312.gf.engine import GeneratingFunctionEngine, as_pattern, get_default_engine
from lis312.oracle.enumerate import lis_histogram
from lis312.perm.normal_form import PATTERN_312
from lis312.perm.permutation import Permutation
from lis312.utils.config_handler import OracleConfig, load_oracle_config
from lis312.utils.logger_handler import get_logger

logger = get_logger(__name__)

# 生成函数的系数应为非负整数；非整数的系数原样保留，必然与枚举结果不一致
Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class Mismatch:
    n: int
    k: int
    oracle: int
    engine: Coefficient

    def __str__(self) -> str:
        return f"n={self.n}, k={self.k}: 枚举 {self.oracle}，生成函数 {self.engine}"


@dataclass(frozen=True)
class NOutcome:
    n: int
    oracle: dict[int, int]
    engine: dict[int, Coefficient]

    @property
    def match(self) -> bool:
        return self.oracle == self.engine

    def first_mismatch(self) -> Optional[Mismatch]:
        for k in sorted(set(self.oracle) | set(self.engine)):
            a, b = self.oracle.get(k, 0), self.engine.get(k, 0)
            if a != b:
                return Mismatch(self.n, k, a, b)
        return None


@dataclass(frozen=True)
class VerificationReport:
    tau: Permutation
    n_max: int
    outcomes: tuple[NOutcome, ...] = field(default_factory=tuple)

    @property
    def match(self) -> bool:
        return all(o.match for o in self.outcomes)

    def first_mismatch(self) -> Optional[Mismatch]:
        for outcome in self.outcomes:
            found = outcome.first_mismatch()
            if found is not None:
                return found
        return None


def _engine_row(row: Sequence[Fraction], n: int) -> dict[int, Coefficient]:
    out: dict[int, Coefficient] = {}
    for k, c in enumerate(row):
        if c == 0:
            continue
        if c.denominator != 1:
            logger.warning(f"n={n}, k={k}: 生成函数系数 {c} 不是整数")
            out[k] = c
        else:
            out[k] = int(c)
    return out


def verify_series(
    tau: Permutation | Sequence[int],
    n_max: int,
    *,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
    engine: Optional[GeneratingFunctionEngine] = None,
    config: Optional[OracleConfig] = None,
) -> VerificationReport:
    """n = 0 … n_max 逐行比对；超过枚举上限时直接抛 EnumerationCapError。"""
    tau = as_pattern(tau)
    engine = engine or get_default_engine()
    config = config or load_oracle_config()
    cap = config.enumeration_cap if cap is None else cap
    if n_max > cap:
        raise EnumerationCapError(f"n_max = {n_max} 超过枚举上限 {cap}")

    table = series(engine.f_tau(tau), n_max)
    outcomes = []
    for n in range(n_max + 1):
        oracle = lis_histogram([PATTERN_312, tau.values], n, cap=cap, workers=workers, config=config)
        expected = _engine_row(table[n], n)
        outcomes.append(NOutcome(n=n, oracle=oracle, engine=expected))
        logger.debug(f"{tau} n={n}: |S_n| = {sum(oracle.values())}")

    report = VerificationReport(tau=tau, n_max=n_max, outcomes=tuple(outcomes))
    if report.match:
        logger.info(f"{tau}: n <= {n_max} 全部一致")
    else:
        logger.error(f"{tau}: 首个不一致 {report.first_mismatch()}")
    return report


__all__ = ["Mismatch", "NOutcome", "VerificationReport", "verify_series"]
