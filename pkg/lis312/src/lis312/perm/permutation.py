"""
排列与模式的基础操作：约化、包含判定、LIS、对称变换、右到左极小值。

约定：
- 排列 σ ∈ S_n 用 1..n 的元组表示，空排列为 ()；
- 任意互不相同的整数序列（word）都可以通过 reduce_word 约化成排列；
- 模式包含按经典定义：存在下标 i_1 < … < i_k，使子序列与 τ 顺序同构。
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from lis312.errors import InvalidInputError


@dataclass(frozen=True)
class Permutation:
    """不可变排列，values 为 1..n 的一个排列（n = 0 时为空元组）。"""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvalidInputError(f"不是 1..{len(values)} 的排列: {values!r}")

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def from_word(cls, word: Iterable[int]) -> "Permutation":
        """把互不相同的整数序列约化为排列。"""
        return cls(reduce_word(word))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def decreasing(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def __str__(self) -> str:
        if len(self.values) <= 9:
            return "".join(str(v) for v in self.values) or "∅"
        return ",".join(str(v) for v in self.values)

    def contains(self, pattern: "Permutation | Sequence[int]") -> bool:
        return contains(self.values, _as_tuple(pattern))

    def avoids(self, pattern: "Permutation | Sequence[int]") -> bool:
        return not self.contains(pattern)

    def lis(self) -> int:
        return lis(self.values)

    def reverse(self) -> "Permutation":
        return Permutation(reverse(self.values))

    def complement(self) -> "Permutation":
        return Permutation(complement(self.values))

    def inverse(self) -> "Permutation":
        return Permutation(inverse(self.values))


def _as_tuple(p: "Permutation | Sequence[int]") -> tuple[int, ...]:
    if isinstance(p, Permutation):
        return p.values
    return tuple(p)


def reduce_word(word: Iterable[int]) -> tuple[int, ...]:
    """
    把互不相同的整数序列映射为顺序同构的排列。

    例：reduce_word((5, 2, 9)) == (2, 1, 3)；reduce_word(()) == ()。
    """
    items = tuple(word)
    if len(set(items)) != len(items):
        raise InvalidInputError(f"序列中存在重复元素，无法约化: {items!r}")
    rank = {v: i + 1 for i, v in enumerate(sorted(items))}
    return tuple(rank[v] for v in items)


def _window(chosen: Sequence[int], pattern: Sequence[int]) -> tuple[float, float]:
    """
    pattern 第 t = len(chosen) 个元素可取的值域，开区间 (low, high)。

    值必须夹在已选元素之间；并且 (lo, v) 与 (v, hi) 中要各自留出足够的整数，
    容纳之后还要放进去的模式元素。
    """
    t = len(chosen)
    p_t = pattern[t]
    lo = p_lo = -math.inf
    hi = p_hi = math.inf
    for p, c in zip(pattern, chosen):
        if p < p_t and c > lo:
            lo, p_lo = c, p
        elif p > p_t and c < hi:
            hi, p_hi = c, p
    rest = pattern[t + 1 :]
    need_below = sum(1 for p in rest if p_lo < p < p_t)
    need_above = sum(1 for p in rest if p_t < p < p_hi)
    return lo + need_below, hi - need_above


def _search(word: Sequence[int], pattern: Sequence[int], start: int, chosen: list[int], last_fixed: bool) -> bool:
    t = len(chosen)
    k = len(pattern)
    if t == k:
        return True
    n = len(word)
    low, high = _window(chosen, pattern)
    if last_fixed and t == k - 1:
        return start <= n - 1 and low < word[n - 1] < high
    # 剩余长度不够放下 k - t 个元素时停止
    stop = n - (k - t) + 1
    if last_fixed:
        stop = min(stop, n - 1)
    for i in range(start, stop):
        v = word[i]
        if low < v < high:
            chosen.append(v)
            if _search(word, pattern, i + 1, chosen, last_fixed):
                return True
            chosen.pop()
    return False


def contains(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """word 是否包含 pattern（空模式被任何序列包含）。"""
    if len(pattern) == 0:
        return True
    if len(pattern) > len(word):
        return False
    return _search(word, pattern, 0, [], last_fixed=False)


def occurs_ending_at_last(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """是否存在一次 pattern 出现，其最后一个元素恰好是 word 的最后一个元素。"""
    if len(pattern) == 0 or len(pattern) > len(word):
        return False
    return _search(word, pattern, 0, [], last_fixed=True)


def avoids(word: Sequence[int], pattern: Sequence[int]) -> bool:
    return not contains(word, pattern)


def avoids_all(word: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """word 是否同时避开 patterns 中的每一个模式。"""
    values = _as_tuple(word)
    return all(not contains(values, _as_tuple(p)) for p in patterns)


def lis(word: Sequence[int]) -> int:
    """最长递增子序列长度（patience sorting，O(n log n)）。"""
    piles: list[int] = []
    for v in word:
        i = bisect_left(piles, v)
        if i == len(piles):
            piles.append(v)
        else:
            piles[i] = v
    return len(piles)


def lis_quadratic(word: Sequence[int]) -> int:
    """O(n^2) 动态规划版本，仅用于交叉校验。"""
    best: list[int] = []
    for i, v in enumerate(word):
        best.append(1 + max((best[j] for j in range(i) if word[j] < v), default=0))
    return max(best, default=0)


def reverse(word: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(word))


def complement(word: Sequence[int]) -> tuple[int, ...]:
    n = len(word)
    return tuple(n + 1 - v for v in word)


def inverse(word: Sequence[int]) -> tuple[int, ...]:
    result = [0] * len(word)
    for position, value in enumerate(word, start=1):
        result[value - 1] = position
    return tuple(result)


def rl_minima(word: Sequence[int]) -> tuple[int, ...]:
    """
    右到左极小值的下标（0 起，升序）。

    σ_i 是右到左极小值当且仅当它小于右边所有元素。
    """
    positions: list[int] = []
    current = None
    for i in range(len(word) - 1, -1, -1):
        if current is None or word[i] < current:
            current = word[i]
            positions.append(i)
    return tuple(reversed(positions))


def right_to_left_minima(word: Sequence[int]) -> tuple[int, ...]:
    """右到左极小值的位置，1 起。例：214365 -> (2, 4, 6)。"""
    return tuple(i + 1 for i in rl_minima(word))


__all__ = [
    "Permutation",
    "reduce_word",
    "contains",
    "occurs_ending_at_last",
    "avoids",
    "avoids_all",
    "lis",
    "lis_quadratic",
    "reverse",
    "complement",
    "inverse",
    "rl_minima",
    "right_to_left_minima",
]
