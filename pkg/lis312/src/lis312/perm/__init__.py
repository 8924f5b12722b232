from lis312.perm.normal_form import NormalForm, NormalFormBlock, PATTERN_312, normal_form, prefix, suffix
from lis312.perm.permutation import (
    Permutation,
    avoids,
    avoids_all,
    complement,
    contains,
    inverse,
    lis,
    lis_quadratic,
    occurs_ending_at_last,
    reduce_word,
    reverse,
    right_to_left_minima,
    rl_minima,
)

__all__ = [
    "Permutation",
    "NormalForm",
    "NormalFormBlock",
    "PATTERN_312",
    "normal_form",
    "prefix",
    "suffix",
    "reduce_word",
    "contains",
    "avoids",
    "avoids_all",
    "occurs_ending_at_last",
    "lis",
    "lis_quadratic",
    "reverse",
    "complement",
    "inverse",
    "rl_minima",
    "right_to_left_minima",
]
