"""
多项式的规范文本输出。

项序：按总次数升序；同次数内 x 的次数高者在前（即 x 先于 q）。
例：1 - 2*x*q - x^2*q + x^2*q^2
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

Exponent = tuple[int, int]


def term_order_key(exponent: Exponent) -> tuple[int, int]:
    i, j = exponent
    return (i + j, -i)


def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("q" if j == 1 else f"q^{j}")
    return "*".join(parts)


def format_fraction(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_terms(terms: Iterable[tuple[Exponent, Fraction]]) -> str:
    ordered = sorted(terms, key=lambda item: term_order_key(item[0]))
    if not ordered:
        return "0"
    pieces: list[str] = []
    for index, ((i, j), c) in enumerate(ordered):
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        mono = _monomial_text(i, j)
        if not mono:
            body = format_fraction(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{format_fraction(magnitude)}*{mono}"
        if index == 0:
            pieces.append(body if sign == "+" else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces)


def render_fraction(num_text: str, den_text: str, *, num_terms: int, den_is_one: bool) -> str:
    """分母为 1 时只输出分子；多项的分子、分母加括号。"""
    if den_is_one:
        return num_text
    left = f"({num_text})" if num_terms > 1 else num_text
    return f"{left} / ({den_text})"


__all__ = ["term_order_key", "format_fraction", "render_terms", "render_fraction"]
