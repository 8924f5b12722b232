from fractions import Fraction
from itertools import permutations

import pytest

from lis312.cheb.asymptotics import catalan
from lis312.errors import EnumerationCapError, InvalidInputError
from lis312.oracle.enumerate import class_size, enumerate_class, lis_histogram
from lis312.oracle.verify import Mismatch, NOutcome, VerificationReport, verify_series
from lis312.perm.normal_form import PATTERN_312
from lis312.perm.permutation import Permutation, contains


def avoiding_patterns(lengths):
    for m in lengths:
        for p in permutations(range(1, m + 1)):
            if not contains(p, PATTERN_312):
                yield p


def label(p) -> str:
    return "".join(map(str, p))


def test_lexicographic_order(oracle_config):
    found = [str(p) for p in enumerate_class([(3, 1, 2), (3, 2, 1)], 3, config=oracle_config)]
    assert found == ["123", "132", "213", "231"]


def test_empty_permutation(oracle_config):
    assert list(enumerate_class([(3, 1, 2)], 0, config=oracle_config)) == [Permutation(())]


@pytest.mark.parametrize("n", range(9))
def test_312_avoiders_are_catalan(oracle_config, n):
    assert class_size([PATTERN_312], n, config=oracle_config) == catalan(n)


def test_class_sizes(oracle_config):
    assert class_size([(3, 1, 2), (1, 2)], 5, config=oracle_config) == 1
    assert class_size([(3, 1, 2), (1, 2, 4, 3)], 4, config=oracle_config) == 13
    assert class_size([(3, 1, 2), (1, 3, 2)], 6, config=oracle_config) == 2**5
    # 重复的模式只算一次
    assert class_size([(1, 2), (1, 2)], 3, config=oracle_config) == 1


def test_histogram(oracle_config):
    assert lis_histogram([(3, 1, 2), (3, 2, 1)], 3, config=oracle_config) == {2: 3, 3: 1}


def test_input_errors(oracle_config):
    with pytest.raises(EnumerationCapError):
        list(enumerate_class([PATTERN_312], 5, cap=4, config=oracle_config))
    with pytest.raises(InvalidInputError):
        list(enumerate_class([PATTERN_312], -1, config=oracle_config))
    with pytest.raises(InvalidInputError):
        list(enumerate_class([()], 3, config=oracle_config))


def test_parallel_matches_serial(oracle_config):
    patterns = [(3, 1, 2), (2, 1, 4, 3)]
    serial = list(enumerate_class(patterns, 7, workers=0, config=oracle_config))
    parallel = list(enumerate_class(patterns, 7, workers=2, config=oracle_config))
    assert parallel == serial


@pytest.mark.parametrize("tau, n_max", [((1, 2, 4, 3), 7), ((2, 1), 5), ((4, 3, 2, 1), 8), ((2, 3, 4, 1), 8)])
def test_verify_series(engine, oracle_config, tau, n_max):
    report = verify_series(tau, n_max, engine=engine, config=oracle_config)
    assert report.match
    assert report.first_mismatch() is None
    assert len(report.outcomes) == n_max + 1


def test_verify_respects_cap(engine, oracle_config):
    with pytest.raises(EnumerationCapError):
        verify_series((2, 1), 9, cap=8, engine=engine, config=oracle_config)


def test_mismatch_reporting():
    outcome = NOutcome(n=3, oracle={1: 1, 2: 4}, engine={1: 1, 2: 5})
    assert not outcome.match
    assert outcome.first_mismatch() == Mismatch(n=3, k=2, oracle=4, engine=5)
    report = VerificationReport(tau=Permutation((2, 1)), n_max=3, outcomes=(NOutcome(2, {1: 1}, {1: 1}), outcome))
    assert not report.match
    assert report.first_mismatch().k == 2


class HalvedEngine:
    """把 F_τ 整体乘以 1/2，系数不再是整数。"""

    def __init__(self, engine):
        self._engine = engine

    def f_tau(self, tau):
        return self._engine.f_tau(tau) * Fraction(1, 2)


def test_non_integral_coefficients_are_mismatches(engine, oracle_config):
    report = verify_series((2, 1), 3, engine=HalvedEngine(engine), config=oracle_config)
    assert not report.match
    first = report.first_mismatch()
    assert first == Mismatch(n=0, k=0, oracle=1, engine=Fraction(1, 2))
    assert all(not outcome.match for outcome in report.outcomes)


@pytest.mark.slow
@pytest.mark.parametrize("tau", list(avoiding_patterns(range(3, 6))), ids=label)
def test_verify_all_short_patterns(engine, oracle_config, tau):
    assert verify_series(tau, 8, engine=engine, config=oracle_config).match


@pytest.mark.slow
@pytest.mark.parametrize("m", range(2, 7))
def test_verify_families(engine, oracle_config, m):
    hat = (m - 1, m) + tuple(range(m - 2, 0, -1))
    families = [tuple(range(1, m + 1)), tuple(range(m, 0, -1))] + ([hat] if m >= 3 else [])
    for tau in families:
        assert verify_series(tau, 10, engine=engine, config=oracle_config).match
