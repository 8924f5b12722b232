"""
沿右到左极小值的分块：τ = τ^(0) m_0 τ^(1) m_1 … τ^(r) m_r。

- prefix(j)  = Θ^(j) = τ^(0) m_0 … τ^(j) m_j（保留原始值的 word，j = -1 时为空）；
- suffix(j)  = Θ^<j> = τ^(j) m_j … τ^(r) m_r 的约化形式（Permutation）。

块内的值保持原样，只有在取 suffix 时才约化。
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

from lis312.errors import InvalidInputError, UnsupportedPatternError
from lis312.perm.permutation import Permutation, contains, reduce_word, rl_minima

PATTERN_312 = (3, 1, 2)


@dataclass(frozen=True)
class NormalFormBlock:
    tau_block: tuple[int, ...]
    min_value: int

    def word(self) -> tuple[int, ...]:
        return self.tau_block + (self.min_value,)


@dataclass(frozen=True)
class NormalForm:
    source: Permutation
    blocks: tuple[NormalFormBlock, ...]

    @property
    def r(self) -> int:
        return len(self.blocks) - 1

    @property
    def tau0(self) -> tuple[int, ...]:
        return self.blocks[0].tau_block

    def min_values(self) -> tuple[int, ...]:
        return tuple(b.min_value for b in self.blocks)

    def prefix(self, j: int) -> tuple[int, ...]:
        """Θ^(j)，-1 ≤ j ≤ r。"""
        if not -1 <= j <= self.r:
            raise InvalidInputError(f"prefix 下标越界: j={j}, r={self.r}")
        return tuple(chain.from_iterable(b.word() for b in self.blocks[: j + 1]))

    def suffix(self, j: int) -> Permutation:
        """Θ^<j>，0 ≤ j ≤ r，已约化。"""
        if not 0 <= j <= self.r:
            raise InvalidInputError(f"suffix 下标越界: j={j}, r={self.r}")
        word = tuple(chain.from_iterable(b.word() for b in self.blocks[j:]))
        return Permutation(reduce_word(word))

    def reassemble(self) -> tuple[int, ...]:
        return self.prefix(self.r)


def normal_form(tau: Permutation) -> NormalForm:
    """计算 τ 的正规形式；τ 必须非空且避开 312。"""
    if len(tau) == 0:
        raise InvalidInputError("空排列没有正规形式")
    if contains(tau.values, PATTERN_312):
        raise UnsupportedPatternError(f"pattern contains 312: {tau}")

    values = tau.values
    blocks: list[NormalFormBlock] = []
    start = 0
    for position in rl_minima(values):
        blocks.append(NormalFormBlock(tau_block=values[start:position], min_value=values[position]))
        start = position + 1
    return NormalForm(source=tau, blocks=tuple(blocks))


def prefix(nf: NormalForm, j: int) -> tuple[int, ...]:
    return nf.prefix(j)


def suffix(nf: NormalForm, j: int) -> Permutation:
    return nf.suffix(j)


__all__ = ["PATTERN_312", "NormalFormBlock", "NormalForm", "normal_form", "prefix", "suffix"]
