from lis312.gf.catalog import (
    CATALOG,
    EXPECTATION_FORMULAS,
    ExpectationFormula,
    dq_rho_one,
    expectation_formula,
    known_closed_form,
    rho_one,
)
from lis312.gf.engine import GeneratingFunctionEngine, as_pattern, f_tau, get_default_engine
from lis312.gf.stats import StatRow, StatSeries, lis_distribution, moments_at, stats
from lis312.gf.table4 import CONFIRMED, REFUTED, TABLE4_ROWS, Table4Entry, Table4Row, table4_report

__all__ = [
    "GeneratingFunctionEngine",
    "get_default_engine",
    "f_tau",
    "as_pattern",
    "CATALOG",
    "known_closed_form",
    "rho_one",
    "dq_rho_one",
    "ExpectationFormula",
    "EXPECTATION_FORMULAS",
    "expectation_formula",
    "StatRow",
    "StatSeries",
    "stats",
    "moments_at",
    "lis_distribution",
    "CONFIRMED",
    "REFUTED",
    "Table4Row",
    "TABLE4_ROWS",
    "Table4Entry",
    "table4_report",
]
