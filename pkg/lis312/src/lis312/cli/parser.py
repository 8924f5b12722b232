"""
argparse 解析器：子命令 gf / series / stats / table4 / asymptotics / verify / chebyshev。
"""

from __future__ import annotations

import argparse

FORMATS = ("text", "csv", "json")
FAMILIES = ("increasing", "decreasing", "hat", "pattern")


def _add_common(sub: argparse.ArgumentParser, *, default_format: str = "text") -> None:
    sub.add_argument("--format", choices=FORMATS, default=default_format, help="输出格式")
    sub.add_argument("--digits", type=int, default=None, help="十进制输出位数（默认见 cli.yml）")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lis312",
        description="避开 312 与 τ 的排列：按长度与 LIS 计数的生成函数 F_τ(x, q) 及其统计量",
    )
    parser.add_argument("--env", default=None, help="配置环境名（覆盖 LIS312_ENV）")
    parser.add_argument("-v", "--verbose", action="store_true", help="控制台输出 INFO 日志")
    subparsers = parser.add_subparsers(dest="command", required=True)

    gf = subparsers.add_parser("gf", help="输出 F_τ(x, q) 的既约分式")
    gf.add_argument("--tau", required=True, help='模式，如 "1243" 或 "10,1,2,3,4,5,6,7,8,9"')
    _add_common(gf)

    series = subparsers.add_parser("series", help="[x^n q^k] F_τ 系数表，行格式 n,k,count")
    series.add_argument("--tau", required=True)
    series.add_argument("--n", type=int, required=True, help="n 的上限")
    _add_common(series, default_format="csv")

    stats = subparsers.add_parser("stats", help="s_n、E(L_n)、E(L_n^2)、方差")
    stats.add_argument("--tau", required=True)
    stats.add_argument("--n", type=int, required=True)
    _add_common(stats)

    table4 = subparsers.add_parser("table4", help="重算 S_4(312) 汇总表并逐项核对")
    _add_common(table4)

    asym = subparsers.add_parser("asymptotics", help="增长率与 E(L_n) 的渐近常数")
    asym.add_argument("--family", choices=FAMILIES, required=True)
    asym.add_argument("--m", type=int, default=None)
    asym.add_argument("--tau", default=None, help="--family pattern 时使用")
    _add_common(asym)

    verify = subparsers.add_parser("verify", help="与暴力枚举逐行比对 LIS 分布")
    verify.add_argument("--tau", required=True)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--cap", type=int, default=None, help="枚举上限（默认见 oracle.yml / LIS312_ORACLE_CAP）")
    _add_common(verify)

    cheb = subparsers.add_parser("chebyshev", help="U_m、P_m、Q_m 及恒等式校验")
    cheb.add_argument("--m", type=int, required=True)
    _add_common(cheb)

    return parser


__all__ = ["FORMATS", "FAMILIES", "build_parser"]
