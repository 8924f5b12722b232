"""
输出工具：有理数一律写成字符串（"3/4"），小数只作为补充字段。
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from typing import Any, Iterable, Optional, Sequence, TextIO

import mpmath

from lis312.cheb.asymptotics import to_mpf

UNDEFINED = "undefined"


def rational_text(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else str(value)


def decimal_text(value, digits: int) -> Optional[str]:
    if value is None:
        return None
    return mpmath.nstr(to_mpf(value) if isinstance(value, (int, Fraction)) else value, digits)


def write_json(out: TextIO, payload: Any) -> None:
    out.write(json.dumps(payload, ensure_ascii=False, indent=2))
    out.write("\n")


def write_csv(out: TextIO, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])


def write_text_table(out: TextIO, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    rows = [[UNDEFINED if v is None else str(v) for v in row] for row in rows]
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(v)) for w, v in zip(widths, row)]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for row in rows:
        out.write("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def write_pairs(out: TextIO, pairs: Sequence[tuple[str, Any]]) -> None:
    for key, value in pairs:
        out.write(f"{key}: {UNDEFINED if value is None else value}\n")


__all__ = [
    "UNDEFINED",
    "rational_text",
    "decimal_text",
    "write_json",
    "write_csv",
    "write_text_table",
    "write_pairs",
]
