"""Pancake and burnt pancake generators, adjacent transpositions, and words.

Subscripts follow the usual pancake convention: ``f_i`` reverses the first
``i + 1`` entries, so unsigned flips run over ``1..n-1`` and burnt flips over
``0..n-1`` (``f^B_0`` only negates the top pancake). Some of the literature
writes ``r_j = f_{j-1}`` instead; that shift is not used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ParseError, SubscriptError
from .perm_core import (
    Element,
    Family,
    Permutation,
    SignedPermutation,
    compose,
    identity,
)


class Alphabet(str, Enum):
    PANCAKE = "pancake"
    ADJACENT = "adjacent"


def subscript_range(family: Family | str, n: int) -> range:
    """Legal generator subscripts for a family at degree n."""
    if Family(family) is Family.UNSIGNED:
        return range(1, n)
    return range(0, n)


def _check_subscript(i: int, n: int, family: Family) -> None:
    legal = subscript_range(family, n)
    if i not in legal:
        raise SubscriptError(
            f"subscript {i} out of range {legal.start}..{legal.stop - 1} "
            f"for {family} generators at n={n}"
        )


def pancake_flip(i: int, n: int) -> Permutation:
    """The prefix reversal f_i of S_n: ``(i+1) i ... 1 (i+2) ... n``."""
    _check_subscript(i, n, Family.UNSIGNED)
    return Permutation(tuple(range(i + 1, 0, -1)) + tuple(range(i + 2, n + 1)))


def burnt_flip(i: int, n: int) -> SignedPermutation:
    """The burnt flip f^B_i of B_n: ``[-(i+1) ... -1 (i+2) ... n]``."""
    _check_subscript(i, n, Family.SIGNED)
    return SignedPermutation(tuple(range(-(i + 1), 0)) + tuple(range(i + 2, n + 1)))


def flip(i: int, n: int, family: Family | str) -> Element:
    if Family(family) is Family.UNSIGNED:
        return pancake_flip(i, n)
    return burnt_flip(i, n)


def adjacent_transposition(i: int, n: int, family: Family | str = Family.UNSIGNED) -> Element:
    """Coxeter generator s_i of S_n, or s^B_i of B_n (s^B_0 negates position 1)."""
    family = Family(family)
    _check_subscript(i, n, family)
    if family is Family.SIGNED and i == 0:
        return SignedPermutation((-1,) + tuple(range(2, n + 1)))
    values = list(range(1, n + 1))
    values[i - 1], values[i] = values[i], values[i - 1]
    if family is Family.UNSIGNED:
        return Permutation(tuple(values))
    return SignedPermutation(tuple(values))


@dataclass(frozen=True)
class GeneratorWord:
    family: Family
    n: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            _check_subscript(letter, self.n, self.family)

    def __str__(self) -> str:
        prefix = "P" if self.family is Family.UNSIGNED else "PB"
        return prefix + ":" + ",".join(map(str, self.letters))

    @classmethod
    def parse(cls, text: str, n: int) -> GeneratorWord:
        """Parse ``"P:3,1,3"`` (unsigned) or ``"PB:2,0,1"`` (signed)."""
        prefix, sep, body = text.strip().partition(":")
        if not sep or prefix not in ("P", "PB"):
            raise ParseError(f"word must start with 'P:' or 'PB:', got {text!r}")
        family = Family.UNSIGNED if prefix == "P" else Family.SIGNED
        try:
            letters = tuple(int(tok) for tok in body.split(",")) if body else ()
        except ValueError:
            raise ParseError(f"bad letter in word {text!r}") from None
        return cls(family, n, letters)


def expand_word(word: GeneratorWord, alphabet: Alphabet | str = Alphabet.PANCAKE) -> Element:
    """Multiply out the letters of a word left to right."""
    alphabet = Alphabet(alphabet)
    make = flip if alphabet is Alphabet.PANCAKE else adjacent_transposition
    result = identity(word.n, word.family)
    for letter in word.letters:
        result = compose(result, make(letter, word.n, word.family))
    return result


def flip_as_adjacent_word(i: int, family: Family | str = Family.UNSIGNED) -> tuple[int, ...]:
    """Letters of f_i (or f^B_i) as a word in adjacent transpositions.

    Staircase form ``(s_1)(s_2 s_1)...(s_i ... s_2 s_1)``; the signed version
    runs each descent down to ``s^B_0``.
    """
    low = 1 if Family(family) is Family.UNSIGNED else 0
    if i < low:
        raise SubscriptError(f"subscript {i} must be at least {low}")
    return tuple(x for top in range(low, i + 1) for x in range(top, low - 1, -1))
