"""Prefix-reversal generators of the symmetric and hyperoctahedral groups."""

from .perm_core import (
    CycleDecomposition,
    Family,
    Permutation,
    SignedPermutation,
    compose,
    cycle_decomposition,
    element_order,
    identity,
    inverse,
)
from .flip_gens import adjacent_transposition, burnt_flip, expand_word, pancake_flip

__all__ = [
    "CycleDecomposition",
    "Family",
    "Permutation",
    "SignedPermutation",
    "adjacent_transposition",
    "burnt_flip",
    "compose",
    "cycle_decomposition",
    "element_order",
    "expand_word",
    "identity",
    "inverse",
    "pancake_flip",
]
