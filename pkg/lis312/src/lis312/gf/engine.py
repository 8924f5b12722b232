"""
F_τ(x, q) 的递归计算。

对避开 312 的模式 τ，沿正规形式 τ = τ^(0) m_0 … τ^(r) m_r 展开：

τ^(0) = ∅：
    F = 1 + xq + x(F - 1) + xq(F_{Θ<1>} - 1)
        + x Σ_{j=1..r} (F_{Θ(j)} - F_{Θ(j-1)}) (F_{Θ<j>} - 1)

τ^(0) ≠ ∅：
    F = 1 + xq + x(F_{τ0} - 1) δ_{r=0} + x(F - 1) δ_{r≥1} + xq(F - 1)
        + x Σ_{j=2..r} (F_{Θ(j)} - F_{Θ(j-1)}) (F_{Θ<j>} - 1)
        + x (F_{Θ(1)} - F_{τ0}) (F_{Θ<1>} - 1) δ_{r≥1}
        + x (F_{τ0} - 1)(F - 1)

F = F_τ 在右边只线性出现（Θ(r) = τ），移项后解一元一次方程。
其余 F_w 都是更短模式的约化形式，按约化后的元组记忆化。
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Optional, Sequence

from lis312.algebra.polynomial import BivariatePolynomial
from lis312.algebra.rational import RationalGF
from lis312.errors import InvalidInputError
from lis312.perm.normal_form import normal_form
from lis312.perm.permutation import Permutation, reduce_word
from lis312.utils.config_handler import EngineConfig, load_engine_config
from lis312.utils.logger_handler import get_logger

logger = get_logger(__name__)

X = RationalGF(BivariatePolynomial.x())
XQ = RationalGF(BivariatePolynomial.monomial(1, 1))
ONE = RationalGF.one()


@dataclass(frozen=True)
class _Linear:
    """const + coef * F，F 为待求的 F_τ。"""

    const: RationalGF
    coef: RationalGF

    @classmethod
    def known(cls, value: RationalGF) -> "_Linear":
        return cls(value, RationalGF.zero())

    @classmethod
    def unknown(cls) -> "_Linear":
        return cls(RationalGF.zero(), ONE)

    def __add__(self, other: "_Linear") -> "_Linear":
        return _Linear(self.const + other.const, self.coef + other.coef)

    def __sub__(self, other: "_Linear") -> "_Linear":
        return _Linear(self.const - other.const, self.coef - other.coef)

    def times(self, factor: RationalGF) -> "_Linear":
        return _Linear(self.const * factor, self.coef * factor)

    def minus_one(self) -> "_Linear":
        return _Linear(self.const - ONE, self.coef)


def as_pattern(tau: Permutation | Sequence[int]) -> Permutation:
    return tau if isinstance(tau, Permutation) else Permutation(tuple(tau))


class GeneratingFunctionEngine:
    """带记忆化的 F_τ 求解器；同一实例可在多线程间共享。"""

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or load_engine_config()
        self._memo: dict[tuple[int, ...], RationalGF] = {}
        self._lock = threading.RLock()

    def f_tau(self, tau: Permutation | Sequence[int]) -> RationalGF:
        """返回 F_τ(x, q)。τ 为空抛 InvalidInputError，含 312 抛 UnsupportedPatternError。"""
        tau = as_pattern(tau)
        if len(tau) == 0:
            raise InvalidInputError("模式不能为空")
        if len(tau) >= self.config.warn_pattern_length:
            logger.warning(f"模式长度为 {len(tau)}，多项式次数增长较快，计算可能较慢: {tau}")
        with self._lock:
            return self._f_word(tau.values)

    def cache_size(self) -> int:
        return len(self._memo)

    def clear_cache(self) -> None:
        with self._lock:
            self._memo.clear()

    # ------------------------------------------------------------------

    def _f_word(self, word: Sequence[int]) -> RationalGF:
        key = reduce_word(word)
        if len(key) == 0:
            return RationalGF.zero()
        if len(key) == 1:
            return ONE
        cached = self._memo.get(key)
        if cached is not None:
            logger.debug(f"memo 命中: {key}")
            return cached
        logger.debug(f"memo 未命中，开始求解: {key}")
        value = self._solve(Permutation(key))
        if self.config.memo_enabled:
            self._memo[key] = value
        logger.info(f"已求出 F_{Permutation(key)} = {value}")
        return value

    def _term(self, word: Sequence[int], tau: Permutation) -> _Linear:
        if reduce_word(word) == tau.values:
            return _Linear.unknown()
        return _Linear.known(self._f_word(word))

    def _solve(self, tau: Permutation) -> RationalGF:
        nf = normal_form(tau)
        r = nf.r
        F = _Linear.unknown()
        suffix_minus_one = {j: self._f_word(nf.suffix(j).values) - ONE for j in range(1, r + 1)}

        rhs = _Linear.known(ONE + XQ)
        if not nf.tau0:
            rhs = rhs + F.minus_one().times(X)
            if r >= 1:
                rhs = rhs + _Linear.known(XQ * suffix_minus_one[1])
            for j in range(1, r + 1):
                diff = self._term(nf.prefix(j), tau) - self._term(nf.prefix(j - 1), tau)
                rhs = rhs + diff.times(X * suffix_minus_one[j])
        else:
            f_tau0_minus_one = self._f_word(nf.tau0) - ONE
            if r == 0:
                rhs = rhs + _Linear.known(X * f_tau0_minus_one)
            else:
                rhs = rhs + F.minus_one().times(X)
            rhs = rhs + F.minus_one().times(XQ)
            for j in range(2, r + 1):
                diff = self._term(nf.prefix(j), tau) - self._term(nf.prefix(j - 1), tau)
                rhs = rhs + diff.times(X * suffix_minus_one[j])
            if r >= 1:
                diff = self._term(nf.prefix(1), tau) - _Linear.known(self._f_word(nf.tau0))
                rhs = rhs + diff.times(X * suffix_minus_one[1])
            rhs = rhs + F.minus_one().times(X * f_tau0_minus_one)

        # F = const + coef * F  =>  F = const / (1 - coef)
        return rhs.const / (ONE - rhs.coef)


_default_engine: Optional[GeneratingFunctionEngine] = None
_default_lock = threading.Lock()


def get_default_engine() -> GeneratingFunctionEngine:
    global _default_engine
    with _default_lock:
        if _default_engine is None:
            _default_engine = GeneratingFunctionEngine()
        return _default_engine


def f_tau(tau: Permutation | Sequence[int]) -> RationalGF:
    return get_default_engine().f_tau(tau)


__all__ = ["GeneratingFunctionEngine", "get_default_engine", "f_tau", "as_pattern"]


if __name__ == "__main__":
    for pattern in ("21", "321", "132", "1243", "1234"):
        print(pattern, "->", f_tau(tuple(int(c) for c in pattern)))
