"""
S_n(T) 的暴力枚举：逐位构造排列，新加入的元素一旦与前缀构成某个模式的出现就剪枝。

前缀包含模式则整条排列包含模式，所以只需检查“以新元素结尾”的出现。
按字典序输出；并行时按首元素分片，再按首元素顺序拼接。
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Optional, Sequence

from lis312.errors import EnumerationCapError, InvalidInputError
from lis312.perm.permutation import Permutation, lis, occurs_ending_at_last
from lis312.utils.config_handler import OracleConfig, load_oracle_config
from lis312.utils.logger_handler import get_logger

logger = get_logger(__name__)

Patterns = tuple[tuple[int, ...], ...]


def _normalize(patterns: Iterable[Permutation | Sequence[int]]) -> Patterns:
    out = []
    for p in patterns:
        values = p.values if isinstance(p, Permutation) else Permutation(tuple(p)).values
        if not values:
            raise InvalidInputError("模式集合中不能有空模式")
        out.append(values)
    # 去重并固定顺序，便于在进程间传递
    return tuple(sorted(set(out), key=lambda v: (len(v), v)))


def _extend(prefix: list[int], used: list[bool], n: int, patterns: Patterns) -> Iterator[tuple[int, ...]]:
    if len(prefix) == n:
        yield tuple(prefix)
        return
    for v in range(1, n + 1):
        if used[v]:
            continue
        prefix.append(v)
        if not any(occurs_ending_at_last(prefix, p) for p in patterns):
            used[v] = True
            yield from _extend(prefix, used, n, patterns)
            used[v] = False
        prefix.pop()


def _with_first(first: int, n: int, patterns: Patterns) -> list[tuple[int, ...]]:
    """首元素固定为 first 的全部排列（进程池的工作单元）。"""
    used = [False] * (n + 1)
    prefix = [first]
    if any(occurs_ending_at_last(prefix, p) for p in patterns):
        return []
    used[first] = True
    return list(_extend(prefix, used, n, patterns))


def _check_n(n: int, cap: int) -> None:
    if n < 0:
        raise InvalidInputError(f"n 必须非负，实际为 {n}")
    if n > cap:
        raise EnumerationCapError(f"n = {n} 超过枚举上限 {cap}（可用 --cap 或 LIS312_ORACLE_CAP 调整）")


def enumerate_class(
    patterns: Iterable[Permutation | Sequence[int]],
    n: int,
    *,
    cap: Optional[int] = None,
    workers: Optional[int] = None,
    config: Optional[OracleConfig] = None,
) -> Iterator[Permutation]:
    """按字典序给出 S_n(patterns) 的全部排列。"""
    config = config or load_oracle_config()
    cap = config.enumeration_cap if cap is None else cap
    workers = config.parallel_workers if workers is None else workers
    pats = _normalize(patterns)
    _check_n(n, cap)

    if n == 0:
        yield Permutation(())
        return

    if workers and workers > 0 and n > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            # map 保持提交顺序，拼接后仍是字典序
            chunks = list(executor.map(_with_first, range(1, n + 1), [n] * n, [pats] * n))
        for chunk in chunks:
            for values in chunk:
                yield Permutation(values)
        return

    for values in _extend([], [False] * (n + 1), n, pats):
        yield Permutation(values)


def class_size(patterns: Iterable[Permutation | Sequence[int]], n: int, **kwargs) -> int:
    return sum(1 for _ in enumerate_class(patterns, n, **kwargs))


def lis_histogram(
    patterns: Iterable[Permutation | Sequence[int]],
    n: int,
    **kwargs,
) -> dict[int, int]:
    """S_n(patterns) 上 LIS 长度的直方图，按 k 升序。"""
    counter: Counter[int] = Counter(lis(p.values) for p in enumerate_class(patterns, n, **kwargs))
    logger.debug(f"n={n}: 共 {sum(counter.values())} 个排列")
    return dict(sorted(counter.items()))


__all__ = ["enumerate_class", "class_size", "lis_histogram"]


if __name__ == "__main__":
    print([str(p) for p in enumerate_class([(3, 1, 2), (3, 2, 1)], 3)])
    print(lis_histogram([(3, 1, 2), (3, 2, 1)], 3))
