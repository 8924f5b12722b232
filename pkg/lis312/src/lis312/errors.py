"""
lis312 的异常层级。

库代码只抛出这里定义的异常；CLI 根据类型映射退出码：
- InvalidInputError 及其子类 -> 退出码 2；
- 其余 Lis312Error 记录日志，同样以退出码 2 结束。

多继承内置异常，方便调用方按 ValueError / ArithmeticError 等通用类型捕获。
"""

from __future__ import annotations


class Lis312Error(Exception):
    """所有 lis312 异常的基类。"""


class InvalidInputError(Lis312Error, ValueError):
    """输入不合法：重复元素、非排列、空模式、无法解析的模式文本等。"""


class UnsupportedPatternError(InvalidInputError):
    """模式包含 312，此时 S_n(312, τ) = S_n(312)，引擎不提供公式。"""


class EnumerationCapError(InvalidInputError):
    """暴力枚举的 n 超过了配置的上限。"""


class NotSeriesExpandableError(Lis312Error, ArithmeticError):
    """分母常数项为 0，在原点不存在幂级数展开。"""


class DegenerateSubstitutionError(NotSeriesExpandableError):
    """代入 q = 1 后分母恒为 0 或常数项为 0。"""


class DivisionByZeroError(Lis312Error, ZeroDivisionError):
    """除以零多项式 / 零有理函数。"""


class PoleError(Lis312Error, ArithmeticError):
    """在分母为 0 的点上求值。"""


class NoDominantSingularityError(Lis312Error, ArithmeticError):
    """分母没有正实根，无法给出指数增长率。"""


__all__ = [
    "Lis312Error",
    "InvalidInputError",
    "UnsupportedPatternError",
    "EnumerationCapError",
    "NotSeriesExpandableError",
    "DegenerateSubstitutionError",
    "DivisionByZeroError",
    "PoleError",
    "NoDominantSingularityError",
]
