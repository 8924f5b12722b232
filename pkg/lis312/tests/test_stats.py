from fractions import Fraction

import pytest

from lis312.errors import InvalidInputError
from lis312.gf.engine import GeneratingFunctionEngine
from lis312.gf.stats import lis_distribution, moments_at, stats
from lis312.utils.config_handler import EngineConfig


def test_distribution_of_321(engine):
    assert lis_distribution((3, 2, 1), 3, engine=engine) == {2: 3, 3: 1}
    assert lis_distribution((3, 2, 1), 0, engine=engine) == {0: 1}


def test_pattern_one_has_empty_classes(engine):
    assert lis_distribution((1,), 3, engine=engine) == {}
    table = stats((1,), 3, engine=engine)
    assert table.counts() == [1, 0, 0, 0]
    for row in table.rows[1:]:
        assert row.mean is None
        assert row.second_moment is None
        assert row.variance is None


def test_moments_of_1243(engine):
    row = moments_at((1, 2, 4, 3), 4, engine=engine)
    assert row.count == 13
    assert row.mean == Fraction(32, 13)
    assert row.distribution is None


def test_rows_are_consistent(engine):
    table = stats((2, 1, 4, 3), 12, engine=engine)
    assert table.n_max == 12
    for row in table.rows:
        assert sum(row.distribution.values()) == row.count
        if row.count:
            first = sum(k * c for k, c in row.distribution.items())
            second = sum(k * k * c for k, c in row.distribution.items())
            assert row.mean == Fraction(first, row.count)
            assert row.second_moment == Fraction(second, row.count)
            assert row.variance == row.second_moment - row.mean**2
            assert row.variance >= 0


def test_large_n_switches_to_recurrence(engine):
    small = GeneratingFunctionEngine(EngineConfig(series_switch_n=8))
    fast = stats((1, 2, 4, 3), 12, engine=small)
    full = stats((1, 2, 4, 3), 12, engine=engine)
    assert all(row.distribution is None for row in fast.rows)
    assert fast.counts() == full.counts()
    assert fast.means() == full.means()
    assert [r.second_moment for r in fast.rows] == [r.second_moment for r in full.rows]


def test_closed_form_for_132_at_large_n(engine):
    n = 1000
    row = moments_at((1, 3, 2), n, engine=engine)
    assert row.count == 2 ** (n - 1)
    assert row.mean == Fraction(n + 1, 2)
    assert row.variance == Fraction(n - 1, 4)


def test_negative_n_rejected(engine):
    with pytest.raises(InvalidInputError):
        stats((2, 1), -1, engine=engine)
    with pytest.raises(InvalidInputError):
        moments_at((2, 1), -1, engine=engine)
    with pytest.raises(InvalidInputError):
        lis_distribution((2, 1), -1, engine=engine)
