"""Unsigned and signed permutations with exact composition, cycles and order.

Points are 1-based. A :class:`Permutation` stores its one-line image; a
:class:`SignedPermutation` stores only its window ``[w(1) ... w(n)]`` and the
action on negative points is derived from ``w(-i) = -w(i)``.

Composition is ``compose(p, q)(x) = p(q(x))``, so right-multiplying a stack
by a flip edits the front of its one-line string.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Union

from .errors import DegreeError, FamilyError, ParseError


class Family(str, enum.Enum):
    UNSIGNED = "unsigned"
    SIGNED = "signed"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Permutation:
    """Element of S_n in one-line notation: ``image[x - 1] == p(x)``."""

    image: tuple[int, ...]

    def __post_init__(self) -> None:
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if not image:
            raise DegreeError("degree must be at least 1")
        if sorted(image) != list(range(1, len(image) + 1)):
            raise ValueError(f"{image} is not a permutation of 1..{len(image)}")

    family = Family.UNSIGNED

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __str__(self) -> str:
        return " ".join(map(str, self.image))

    def points(self) -> range:
        return range(1, self.n + 1)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse the text form ``"2 1 3 4"``."""
        parts = text.split()
        try:
            image = tuple(int(tok) for tok in parts)
        except ValueError:
            raise ParseError(f"not a permutation: {text!r}") from None
        if not image or text != " ".join(parts):
            raise ParseError(f"not a permutation: {text!r}")
        try:
            return cls(image)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class SignedPermutation:
    """Element of B_n in window notation: ``window[x - 1] == w(x)`` for x > 0."""

    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        if not window:
            raise DegreeError("degree must be at least 1")
        if sorted(abs(v) for v in window) != list(range(1, len(window) + 1)):
            raise ValueError(f"{window} is not a signed permutation of [±{len(window)}]")

    family = Family.SIGNED

    @property
    def n(self) -> int:
        return len(self.window)

    def __call__(self, x: int) -> int:
        if x > 0:
            return self.window[x - 1]
        return -self.window[-x - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.window)) + "]"

    def points(self) -> list[int]:
        """All 2n points, in canonical order 1, -1, 2, -2, ..."""
        return [s * m for m in range(1, self.n + 1) for s in (1, -1)]

    @classmethod
    def parse(cls, text: str) -> SignedPermutation:
        """Parse the text form ``"[-2 -1 3]"``."""
        if not (text.startswith("[") and text.endswith("]")):
            raise ParseError(f"not a signed permutation: {text!r}")
        body = text[1:-1]
        parts = body.split()
        try:
            window = tuple(int(tok) for tok in parts)
        except ValueError:
            raise ParseError(f"not a signed permutation: {text!r}") from None
        if not window or body != " ".join(parts):
            raise ParseError(f"not a signed permutation: {text!r}")
        try:
            return cls(window)
        except ValueError as exc:
            raise ParseError(str(exc)) from None


Element = Union[Permutation, SignedPermutation]


def point_key(x: int) -> tuple[int, bool]:
    """Sort key for points: by magnitude, then positive before negative."""
    return abs(x), x < 0


def parse_element(text: str) -> Element:
    text = text.strip()
    if text.startswith("["):
        return SignedPermutation.parse(text)
    return Permutation.parse(text)


def identity(n: int, family: Family | str = Family.UNSIGNED) -> Element:
    if not isinstance(n, int) or n < 1:
        raise DegreeError(f"degree must be a positive integer, got {n!r}")
    family = Family(family)
    if family is Family.UNSIGNED:
        return Permutation(tuple(range(1, n + 1)))
    return SignedPermutation(tuple(range(1, n + 1)))


def _check_pair(p: Element, q: Element) -> None:
    if type(p) is not type(q):
        raise FamilyError(f"cannot combine {p.family} and {q.family} elements")
    if p.n != q.n:
        raise DegreeError(f"degree mismatch: {p.n} vs {q.n}")


def compose(p: Element, q: Element) -> Element:
    """Return the element x -> p(q(x))."""
    _check_pair(p, q)
    if isinstance(p, Permutation):
        img = p.image
        return Permutation(tuple(img[v - 1] for v in q.image))
    win = p.window
    return SignedPermutation(
        tuple(win[v - 1] if v > 0 else -win[-v - 1] for v in q.window)
    )


def inverse(p: Element) -> Element:
    if isinstance(p, Permutation):
        inv = [0] * p.n
        for x, v in enumerate(p.image, start=1):
            inv[v - 1] = x
        return Permutation(tuple(inv))
    inv = [0] * p.n
    for x, v in enumerate(p.window, start=1):
        # w(x) = v  =>  w^{-1}(|v|) = sign(v) * x
        inv[abs(v) - 1] = x if v > 0 else -x
    return SignedPermutation(tuple(inv))


def power(p: Element, m: int) -> Element:
    """Return p composed with itself m times (m may be negative)."""
    if m < 0:
        p, m = inverse(p), -m
    result = identity(p.n, p.family)
    base = p
    while m:
        if m & 1:
            result = compose(result, base)
        base = compose(base, base)
        m >>= 1
    return result


@dataclass(frozen=True)
class CycleDecomposition:
    """Disjoint cycles of an element in canonical form.

    Each cycle starts at its smallest point under :func:`point_key` and the
    cycles are sorted by that leading point. Fixed points appear as 1-cycles
    only when ``include_fixed`` is set.
    """

    cycles: tuple[tuple[int, ...], ...]
    include_fixed: bool = False

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.cycles)

    def __len__(self) -> int:
        return len(self.cycles)

    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]

    def support(self) -> set[int]:
        return {x for c in self.cycles for x in c}

    def __str__(self) -> str:
        shown = [c for c in self.cycles if len(c) > 1]
        if not shown:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in shown)


def cycle_decomposition(p: Element, include_fixed: bool = False) -> CycleDecomposition:
    seen: set[int] = set()
    cycles = []
    for start in sorted(p.points(), key=point_key):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        x = p(start)
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = p(x)
        if len(cycle) > 1 or include_fixed:
            cycles.append(tuple(cycle))
    # starts are visited in key order, so each cycle already leads with its minimum
    return CycleDecomposition(tuple(cycles), include_fixed)


def from_cycles(cycles, n: int, family: Family | str = Family.UNSIGNED) -> Element:
    """Build an element from disjoint cycles; signed cycles must be closed under negation."""
    family = Family(family)
    mapping: dict[int, int] = {}
    for cycle in cycles:
        cycle = list(cycle)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            if a in mapping:
                raise ValueError(f"point {a} appears in more than one cycle")
            mapping[a] = b
    if family is Family.UNSIGNED:
        return Permutation(tuple(mapping.get(x, x) for x in range(1, n + 1)))
    for a, b in mapping.items():
        if mapping.get(-a, -a) != -b:
            raise ValueError("signed cycles must satisfy w(-i) = -w(i)")
    return SignedPermutation(tuple(mapping.get(x, x) for x in range(1, n + 1)))


def element_order(p: Element) -> int:
    """Least m >= 1 with p^m = identity, as the lcm of cycle lengths."""
    return reduce(math.lcm, cycle_decomposition(p).lengths(), 1)


def is_identity(p: Element) -> bool:
    values = p.image if isinstance(p, Permutation) else p.window
    return all(v == x for x, v in enumerate(values, start=1))
