"""
命令行中的模式写法：

- 紧凑写法 "1243"，仅限长度 <= 9；
- 逗号写法 "10,1,2,3,4,5,6,7,8,9"，任意长度。
"""

from __future__ import annotations

from dataclasses import dataclass

from lis312.errors import InvalidInputError
from lis312.perm.permutation import Permutation

COMPACT_MAX_LENGTH = 9


@dataclass(frozen=True)
class PatternSpec:
    text: str

    def parse(self) -> Permutation:
        raw = self.text.strip()
        if not raw:
            raise InvalidInputError("模式不能为空")
        if "," in raw:
            parts = [p.strip() for p in raw.split(",")]
            if not all(p.isdigit() for p in parts):
                raise InvalidInputError(f"无法解析模式: {self.text!r}")
            values = tuple(int(p) for p in parts)
        else:
            if not raw.isdigit():
                raise InvalidInputError(f"无法解析模式: {self.text!r}")
            if len(raw) > COMPACT_MAX_LENGTH:
                raise InvalidInputError(f"紧凑写法只支持长度 <= {COMPACT_MAX_LENGTH}，更长的模式请用逗号分隔")
            values = tuple(int(c) for c in raw)
        return Permutation(values)


def parse_pattern(text: str) -> Permutation:
    return PatternSpec(text).parse()


__all__ = ["COMPACT_MAX_LENGTH", "PatternSpec", "parse_pattern"]
