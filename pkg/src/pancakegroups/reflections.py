"""Conjugates of pancake generators ("pancake reflections") and their counts."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

from .errors import ResourceCapError
from .flip_gens import adjacent_transposition, burnt_flip, pancake_flip, subscript_range
from .perm_core import (
    Element,
    Family,
    Permutation,
    SignedPermutation,
    compose,
    cycle_decomposition,
    identity,
    inverse,
    is_identity,
    point_key,
)

DEFAULT_CAPS = {"involutions": 8, "unsigned_pancake": 7, "signed_pancake": 6, "signed_coxeter": 6}


class ReflectionFamily(str, Enum):
    UNSIGNED_PANCAKE = "unsigned_pancake"
    SIGNED_PANCAKE = "signed_pancake"
    SIGNED_COXETER = "signed_coxeter"


def _cycle_sort_key(p: Element):
    return [[point_key(x) for x in c] for c in cycle_decomposition(p).cycles]


@dataclass(frozen=True)
class ReflectionSet:
    family: ReflectionFamily
    n: int
    elements: frozenset

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item) -> bool:
        return item in self.elements

    def sorted_elements(self) -> list[Element]:
        return sorted(self.elements, key=_cycle_sort_key)

    def cycle_strings(self) -> list[str]:
        return [str(cycle_decomposition(p)) for p in self.sorted_elements()]


def _check_cap(n: int, cap: int, what: str, size: int) -> None:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n > cap:
        raise ResourceCapError(
            f"{what} at n={n} exceeds the cap n <= {cap} (about {size} group elements)",
            estimate=size,
        )


def all_permutations(n: int):
    for image in itertools.permutations(range(1, n + 1)):
        yield Permutation(image)


def all_signed_permutations(n: int):
    for image in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(tuple(s * v for s, v in zip(signs, image)))


def involutions(n: int, cap: int = DEFAULT_CAPS["involutions"]) -> ReflectionSet:
    """All non-identity p in S_n with p^2 = e, by exhaustive search."""
    _check_cap(n, cap, "involution enumeration", math.factorial(n))
    found = frozenset(
        p for p in all_permutations(n) if not is_identity(p) and is_identity(compose(p, p))
    )
    return ReflectionSet(ReflectionFamily.UNSIGNED_PANCAKE, n, found)


def _conjugates(group, generators) -> frozenset:
    out = set()
    for w in group:
        w_inv = inverse(w)
        for g in generators:
            out.add(compose(compose(w, g), w_inv))
    return frozenset(out)


def pancake_reflections(n: int, cap: int = DEFAULT_CAPS["unsigned_pancake"]) -> ReflectionSet:
    """All w f_i w^{-1} for w in S_n and 1 <= i <= n-1."""
    _check_cap(n, cap, "pancake reflection sweep", math.factorial(n))
    gens = [pancake_flip(i, n) for i in subscript_range(Family.UNSIGNED, n)]
    return ReflectionSet(
        ReflectionFamily.UNSIGNED_PANCAKE, n, _conjugates(all_permutations(n), gens)
    )


def involution_count_formula(n: int) -> int:
    """Number of non-identity involutions of S_n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return sum(
        math.factorial(n) // (2**k * math.factorial(n - 2 * k) * math.factorial(k))
        for k in range(1, n // 2 + 1)
    )


def reflection_witness(t: Permutation) -> tuple[Permutation, int]:
    """Find w and a flip f_{2k-1} with ``w f_{2k-1} = t w``.

    For ``t = (a_1,b_1)...(a_k,b_k)`` with ``a_1 < ... < a_k`` and ``a_m < b_m``,
    ``w`` is ``a_1 ... a_k b_k ... b_1`` followed by the untouched points in
    ascending order. Returns ``(w, 2k - 1)``.
    """
    if not isinstance(t, Permutation):
        raise TypeError("reflection_witness expects an unsigned permutation")
    if is_identity(t):
        raise ValueError("the identity is not a reflection")
    if not is_identity(compose(t, t)):
        raise ValueError(f"{t} is not an involution")
    pairs = [c for c in cycle_decomposition(t).cycles]
    k = len(pairs)
    a = [c[0] for c in pairs]
    b = [c[1] for c in pairs]
    rest = sorted(set(range(1, t.n + 1)) - set(a) - set(b))
    w = Permutation(tuple(a + b[::-1] + rest))
    subscript = 2 * k - 1
    f = pancake_flip(subscript, t.n)
    if compose(w, f) != compose(t, w):
        raise AssertionError(f"witness check failed for {t}")
    return w, subscript


def burnt_reflections(n: int, cap: int = DEFAULT_CAPS["signed_pancake"]) -> ReflectionSet:
    """All w f^B_i w^{-1} for w in B_n and 0 <= i <= n-1."""
    _check_cap(n, cap, "burnt reflection sweep", 2**n * math.factorial(n))
    gens = [burnt_flip(i, n) for i in subscript_range(Family.SIGNED, n)]
    return ReflectionSet(
        ReflectionFamily.SIGNED_PANCAKE, n, _conjugates(all_signed_permutations(n), gens)
    )


def burnt_reflections_from_prefixes(n: int, cap: int = DEFAULT_CAPS["signed_pancake"]) -> ReflectionSet:
    """Burnt reflections built directly from their cycle form.

    For every prefix ``w_1 ... w_{i+1}`` of signed values with distinct
    magnitudes the element is ``(w_1, -w_{i+1})(w_2, -w_i)...(w_{i+1}, -w_1)``,
    extended to negative points by symmetry.
    """
    _check_cap(n, cap, "burnt reflection construction", 2**n * math.factorial(n))
    found = set()
    signed_values = [s * m for m in range(1, n + 1) for s in (1, -1)]
    for length in range(1, n + 1):
        for prefix in itertools.permutations(signed_values, length):
            if len({abs(v) for v in prefix}) < length:
                continue
            window = list(range(1, n + 1))
            for m, v in enumerate(prefix):
                image = -prefix[length - 1 - m]
                # t(v) = image, so t(|v|) = sign(v) * image
                window[abs(v) - 1] = image if v > 0 else -image
            found.add(SignedPermutation(tuple(window)))
    return ReflectionSet(ReflectionFamily.SIGNED_PANCAKE, n, frozenset(found))


def burnt_reflection_count_formula(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return sum(math.comb(n, i) * 2 ** (i // 2) for i in range(1, n + 1))


def _double_factorial(m: int) -> int:
    return math.prod(range(m, 0, -2))


def burnt_reflection_count(n: int) -> int:
    """Exact number of burnt reflections, agreeing with the enumeration.

    A reflection moving i magnitudes pairs them off around the centre of
    the reversed prefix (with one negated fixed magnitude when i is odd):
    ``i!!`` pairings for odd i, ``(i-1)!!`` for even i, and a sign choice
    per pair.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    total = 0
    for i in range(1, n + 1):
        pairings = _double_factorial(i) if i % 2 else _double_factorial(i - 1)
        total += math.comb(n, i) * pairings * 2 ** (i // 2)
    return total


def coxeter_reflections_signed(n: int, cap: int = DEFAULT_CAPS["signed_coxeter"]) -> ReflectionSet:
    """Classical reflections of B_n: ``(i,j)(-i,-j)`` for ``1 <= i < |j| <= n`` and ``(i,-i)``."""
    _check_cap(n, cap, "signed reflection construction", 2 * n * n)
    found = set()
    for i in range(1, n + 1):
        window = list(range(1, n + 1))
        window[i - 1] = -i
        found.add(SignedPermutation(tuple(window)))
        for m in range(i + 1, n + 1):
            for j in (m, -m):
                window = list(range(1, n + 1))
                window[i - 1] = j
                window[m - 1] = i if j > 0 else -i
                found.add(SignedPermutation(tuple(window)))
    return ReflectionSet(ReflectionFamily.SIGNED_COXETER, n, frozenset(found))


def coxeter_reflections_by_conjugation(n: int, cap: int = DEFAULT_CAPS["signed_coxeter"]) -> ReflectionSet:
    """All w s^B_i w^{-1}; the enumeration counterpart of :func:`coxeter_reflections_signed`."""
    _check_cap(n, cap, "signed reflection sweep", 2**n * math.factorial(n))
    gens = [adjacent_transposition(i, n, Family.SIGNED) for i in range(n)]
    return ReflectionSet(
        ReflectionFamily.SIGNED_COXETER, n, _conjugates(all_signed_permutations(n), gens)
    )


@dataclass(frozen=True)
class ReflectionComparison:
    n: int
    coxeter_size: int
    pancake_size: int
    only_coxeter: tuple[str, ...]
    only_pancake: tuple[str, ...]
    sign_flips_in_both: bool


def compare_signed_reflections(n: int, cap: int = DEFAULT_CAPS["signed_pancake"]) -> ReflectionComparison:
    """Symmetric difference between classical and burnt pancake reflections of B_n."""
    cox = coxeter_reflections_signed(n, cap)
    pan = burnt_reflections(n, cap)
    sign_flips = [
        SignedPermutation(tuple(-x if x == i else x for x in range(1, n + 1)))
        for i in range(1, n + 1)
    ]

    def strings(elements):
        return tuple(str(cycle_decomposition(p)) for p in sorted(elements, key=_cycle_sort_key))

    return ReflectionComparison(
        n=n,
        coxeter_size=len(cox),
        pancake_size=len(pan),
        only_coxeter=strings(cox.elements - pan.elements),
        only_pancake=strings(pan.elements - cox.elements),
        sign_flips_in_both=all(s in cox and s in pan for s in sign_flips),
    )


def is_involution(p: Element) -> bool:
    return not is_identity(p) and compose(p, p) == identity(p.n, p.family)
