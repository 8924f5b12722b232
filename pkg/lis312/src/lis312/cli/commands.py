"""
各子命令的实现。每个命令返回退出码：0 成功，1 校验不一致；输入错误以 InvalidInputError 抛出，由入口转成 2。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, TextIO

import mpmath

from lis312.algebra.polynomial import x_coefficients
from lis312.algebra.rational import at_q1
from lis312.algebra.render import render_terms
from lis312.algebra.series import series
from lis312.cheb.asymptotics import (
    alpha_constants,
    decreasing_growth,
    growth_rate,
    increasing_asymptotics,
    pattern_asymptotics,
    slope_decreasing,
    slope_hat,
    slope_hat_with_u1_term,
)
from lis312.cheb.chebyshev import cheb_product_check, cheb_u, kernel_p, kernel_q, rationalization_certificate
from lis312.cheb.closed_forms import f_decreasing, f_hat
from lis312.cli.output import decimal_text, rational_text, write_csv, write_json, write_pairs, write_text_table
from lis312.cli.pattern_spec import parse_pattern
from lis312.errors import InvalidInputError
from lis312.gf.catalog import expectation_formula
from lis312.gf.engine import GeneratingFunctionEngine
from lis312.gf.stats import stats
from lis312.gf.table4 import table4_report
from lis312.oracle.verify import verify_series
from lis312.perm.permutation import Permutation
from lis312.utils.config_handler import AppConfig
from lis312.utils.logger_handler import get_logger

logger = get_logger(__name__)

# chebyshev 命令做乘积公式数值校验的取样点
PRODUCT_CHECK_POINTS = ("0.7", "-0.3", "1.5")


@dataclass
class CommandContext:
    config: AppConfig
    engine: GeneratingFunctionEngine
    out: TextIO


def _tau(args) -> Permutation:
    if args.tau is None:
        raise InvalidInputError("缺少 --tau")
    return parse_pattern(args.tau)


def _require_n(args) -> int:
    if args.n is None or args.n < 0:
        raise InvalidInputError("需要非负的 --n")
    return args.n


def _require_m(args, lowest: int) -> int:
    if args.m is None or args.m < lowest:
        raise InvalidInputError(f"需要 --m >= {lowest}")
    return args.m


# ---------------------------------------------------------------------------
# gf / series / stats
# ---------------------------------------------------------------------------


def cmd_gf(args, ctx: CommandContext) -> int:
    tau = _tau(args)
    F = ctx.engine.f_tau(tau)
    if args.format == "json":
        write_json(ctx.out, {"pattern": str(tau), **F.to_json()})
    elif args.format == "text":
        ctx.out.write(F.to_text() + "\n")
    else:
        raise InvalidInputError("gf 只支持 text / json 输出")
    return 0


def cmd_series(args, ctx: CommandContext) -> int:
    tau = _tau(args)
    n_max = _require_n(args)
    table = series(ctx.engine.f_tau(tau), n_max)
    rows = [(n, k, int(c)) for n, row in enumerate(table) for k, c in enumerate(row) if c != 0]
    if args.format == "json":
        write_json(
            ctx.out,
            {"pattern": str(tau), "n_max": n_max, "rows": [{"n": n, "k": k, "count": c} for n, k, c in rows]},
        )
    else:
        write_csv(ctx.out, ("n", "k", "count"), rows)
    return 0


def _formula_status(formula, n: int, mean, second_moment) -> Optional[str]:
    if formula is None:
        return None
    if not (formula.mean_applies(n) and formula.second_moment_applies(n)):
        return "n/a"
    ok = mean == formula.mean(n) and second_moment == formula.second_moment(n)
    return "ok" if ok else "mismatch"


def cmd_stats(args, ctx: CommandContext) -> int:
    tau = _tau(args)
    n_max = _require_n(args)
    digits = args.digits or ctx.config.cli.decimal_digits
    table = stats(tau, n_max, engine=ctx.engine)
    formula = expectation_formula(tau)

    header = ["n", "s_n", "mean", "mean_decimal", "second_moment", "second_moment_decimal", "variance", "variance_decimal"]
    if formula is not None:
        header.append("formula_check")
    records = []
    for row in table.rows:
        record = [
            row.n,
            row.count,
            rational_text(row.mean),
            decimal_text(row.mean, digits),
            rational_text(row.second_moment),
            decimal_text(row.second_moment, digits),
            rational_text(row.variance),
            decimal_text(row.variance, digits),
        ]
        if formula is not None:
            record.append(_formula_status(formula, row.n, row.mean, row.second_moment))
        records.append(record)

    if args.format == "json":
        write_json(ctx.out, {"pattern": str(tau), "rows": [dict(zip(header, r)) for r in records]})
    elif args.format == "csv":
        write_csv(ctx.out, header, records)
    else:
        write_text_table(ctx.out, header, records)
    failed = formula is not None and any(r[-1] == "mismatch" for r in records)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# table4 / asymptotics
# ---------------------------------------------------------------------------


def cmd_table4(args, ctx: CommandContext) -> int:
    digits = args.digits or ctx.config.cli.slope_digits
    entries = table4_report(exact_n=ctx.config.cli.table4_exact_n, engine=ctx.engine, config=ctx.config.cheb)
    header = [
        "pattern",
        "row",
        "F",
        "F_check",
        "mean_formula_check",
        "printed_asymptotic",
        "computed_asymptotic",
        "asymptotic_check",
    ]

    def _asym(exponent: int, constant) -> str:
        return f"{mpmath.nstr(constant, digits)}*n^{exponent}"

    records = [
        [
            str(Permutation(e.pattern)),
            e.row_label,
            e.f_text,
            e.f_verdict,
            e.mean_verdict,
            _asym(e.printed_exponent, e.printed_constant),
            _asym(e.computed_exponent, e.computed_constant),
            e.slope_verdict,
        ]
        for e in entries
    ]
    if args.format == "json":
        write_json(ctx.out, [dict(zip(header, r)) for r in records])
    elif args.format == "csv":
        write_csv(ctx.out, header, records)
    else:
        write_text_table(ctx.out, header, records)
    # 汇总表中的印刷错误属于报告内容，不算失败
    return 0


def _asymptotics_pairs(args, ctx: CommandContext, digits: int) -> list[tuple[str, object]]:
    cheb_cfg = ctx.config.cheb
    family = args.family
    if family == "decreasing":
        m = _require_m(args, 2)
        growth = growth_rate(at_q1(f_decreasing(m)), config=cheb_cfg)
        alpha, alpha_tilde = alpha_constants(m, config=cheb_cfg)
        return [
            ("family", family),
            ("m", m),
            ("growth", mpmath.nstr(growth.to_mpf(), digits)),
            ("growth_closed_form", mpmath.nstr(decreasing_growth(m, config=cheb_cfg), digits)),
            ("slope", mpmath.nstr(slope_decreasing(m, config=cheb_cfg), digits)),
            ("alpha", mpmath.nstr(alpha, digits)),
            ("alpha_tilde", mpmath.nstr(alpha_tilde, digits)),
        ]
    if family == "hat":
        m = _require_m(args, 4)
        F = f_hat(m)
        generic = pattern_asymptotics(F, config=cheb_cfg)
        return [
            ("family", family),
            ("m", m),
            ("growth", mpmath.nstr(growth_rate(at_q1(F), config=cheb_cfg).to_mpf(), digits)),
            ("slope", mpmath.nstr(slope_hat(m, config=cheb_cfg), digits)),
            ("slope_with_u1_term", mpmath.nstr(slope_hat_with_u1_term(m, config=cheb_cfg), digits)),
            ("slope_from_poles", mpmath.nstr(generic.slope, digits)),
        ]
    if family == "increasing":
        m = _require_m(args, 3)
        info = increasing_asymptotics(m)
        return [
            ("family", family),
            ("m", m),
            ("growth", "1"),
            ("count_lead_coefficient", str(info.lead_coefficient)),
            ("count_power", info.power),
            ("limit", info.expected_limit),
        ]
    if family == "pattern":
        tau = _tau(args)
        F = ctx.engine.f_tau(tau)
        result = pattern_asymptotics(F, config=cheb_cfg)
        return [
            ("family", family),
            ("pattern", str(tau)),
            ("growth", mpmath.nstr(growth_rate(at_q1(F), config=cheb_cfg).to_mpf(), digits)),
            ("count_pole_order", result.count.order),
            ("mean_exponent", result.mean_exponent),
            ("mean_constant", mpmath.nstr(result.mean_constant, digits)),
            ("slope", mpmath.nstr(result.slope, digits)),
        ]
    raise InvalidInputError(f"未知的 --family: {family!r}")


def cmd_asymptotics(args, ctx: CommandContext) -> int:
    digits = args.digits or ctx.config.cli.slope_digits
    if args.family is None:
        raise InvalidInputError("缺少 --family")
    pairs = _asymptotics_pairs(args, ctx, digits)
    if args.format == "json":
        write_json(ctx.out, {k: str(v) for k, v in pairs})
    else:
        write_pairs(ctx.out, pairs)
    return 0


# ---------------------------------------------------------------------------
# verify / chebyshev
# ---------------------------------------------------------------------------


def cmd_verify(args, ctx: CommandContext) -> int:
    tau = _tau(args)
    n_max = _require_n(args)
    report = verify_series(
        tau,
        n_max,
        cap=args.cap,
        engine=ctx.engine,
        config=ctx.config.oracle,
    )
    mismatch = report.first_mismatch()
    if args.format == "json":
        write_json(
            ctx.out,
            {
                "pattern": str(tau),
                "n_max": n_max,
                "match": report.match,
                "outcomes": [
                    {
                        "n": o.n,
                        "oracle": {str(k): v for k, v in o.oracle.items()},
                        "engine": {str(k): v for k, v in o.engine.items()},
                        "match": o.match,
                    }
                    for o in report.outcomes
                ],
                "first_mismatch": None
                if mismatch is None
                else {"n": mismatch.n, "k": mismatch.k, "oracle": mismatch.oracle, "engine": mismatch.engine},
            },
        )
    else:
        for o in report.outcomes:
            status = "ok" if o.match else "MISMATCH"
            ctx.out.write(f"n={o.n}  |S_n|={sum(o.oracle.values())}  {status}\n")
        ctx.out.write("match\n" if report.match else f"mismatch: {mismatch}\n")
    return 0 if report.match else 1


def cmd_chebyshev(args, ctx: CommandContext) -> int:
    m = _require_m(args, 0)
    cheb_cfg = ctx.config.cheb
    product_ok = (
        all(
            cheb_product_check(
                m,
                mpmath.mpf(t),
                precision_bits=cheb_cfg.float_precision_bits,
                rel_tol_exponent=cheb_cfg.product_check_rel_tol_exponent,
            )
            for t in PRODUCT_CHECK_POINTS
        )
        if m >= 1
        else True
    )
    certificate_ok = rationalization_certificate(m)
    pairs = [
        ("m", m),
        ("U_m", cheb_u(m).to_text()),
        ("P_m", kernel_p(m).to_text()),
        ("Q_m", render_terms(((i, 0), c) for i, c in enumerate(x_coefficients(kernel_q(m))) if c)),
        ("product_formula", "ok" if product_ok else "failed"),
        ("rationalization", "ok" if certificate_ok else "failed"),
    ]
    if args.format == "json":
        write_json(ctx.out, {k: str(v) for k, v in pairs})
    else:
        write_pairs(ctx.out, pairs)
    return 0 if product_ok and certificate_ok else 1


COMMANDS = {
    "gf": cmd_gf,
    "series": cmd_series,
    "stats": cmd_stats,
    "table4": cmd_table4,
    "asymptotics": cmd_asymptotics,
    "verify": cmd_verify,
    "chebyshev": cmd_chebyshev,
}

__all__ = ["CommandContext", "COMMANDS"] + [f.__name__ for f in COMMANDS.values()]
