from itertools import permutations

import pytest

from lis312.errors import InvalidInputError, UnsupportedPatternError
from lis312.perm.normal_form import PATTERN_312, normal_form, prefix, suffix
from lis312.perm.permutation import Permutation, contains


def avoiders_of_312(n: int):
    return [Permutation(p) for p in permutations(range(1, n + 1)) if not contains(p, PATTERN_312)]


def test_blocks_of_214365():
    nf = normal_form(Permutation((2, 1, 4, 3, 6, 5)))
    assert nf.r == 2
    assert nf.tau0 == (2,)
    assert nf.min_values() == (1, 3, 5)
    assert [b.tau_block for b in nf.blocks] == [(2,), (4,), (6,)]
    assert prefix(nf, -1) == ()
    assert prefix(nf, 0) == (2, 1)
    assert prefix(nf, 1) == (2, 1, 4, 3)
    assert suffix(nf, 1).values == (2, 1, 4, 3)
    assert suffix(nf, 0).values == (2, 1, 4, 3, 6, 5)


def test_increasing_pattern_has_empty_blocks():
    nf = normal_form(Permutation.identity(4))
    assert nf.r == 3
    assert nf.tau0 == ()
    assert all(b.tau_block == () for b in nf.blocks)


def test_decreasing_pattern_is_one_block():
    nf = normal_form(Permutation.decreasing(4))
    assert nf.r == 0
    assert nf.tau0 == (4, 3, 2)
    assert nf.min_values() == (1,)


def test_rejects_312_and_empty():
    with pytest.raises(UnsupportedPatternError):
        normal_form(Permutation((3, 1, 2)))
    with pytest.raises(UnsupportedPatternError):
        normal_form(Permutation((1, 4, 2, 3)))
    with pytest.raises(InvalidInputError):
        normal_form(Permutation(()))


def test_index_bounds():
    nf = normal_form(Permutation((1, 3, 2)))
    with pytest.raises(InvalidInputError):
        nf.prefix(nf.r + 1)
    with pytest.raises(InvalidInputError):
        nf.suffix(-1)


@pytest.mark.parametrize("n", range(1, 7))
def test_structure_on_all_avoiders(n):
    for tau in avoiders_of_312(n):
        nf = normal_form(tau)
        assert nf.reassemble() == tau.values
        mins = nf.min_values()
        assert list(mins) == sorted(mins)
        assert mins[0] == 1
        for block in nf.blocks:
            assert all(v > block.min_value for v in block.tau_block)
        assert nf.suffix(0) == tau
