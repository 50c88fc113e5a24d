"""Closed-form orders of products of two and three prefix reversals.

Public functions take generator subscripts (``f_a``, ``f_b``; burnt ``f^B_a``).
Internally the case analysis runs in a shifted frame ``i = a + 1``,
``j = b + 1`` where a pair is written ``f_{i-1} f_{j-1}``; that frame never
leaks out of this module.

Every formula has a brute-force counterpart (``*_oracle``) that builds the
product and takes the lcm of its cycle lengths.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .errors import DegreeError, SubscriptError
from .flip_gens import burnt_flip, pancake_flip
from .perm_core import compose, element_order

UNCOVERED = "uncovered"


@dataclass(frozen=True)
class TwoFlipCaseData:
    """Quantities of the shifted frame for the pair ``f_{i-1} f_{j-1}``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise ValueError(f"need 1 <= i < j, got i={self.i}, j={self.j}")

    @property
    def d(self) -> int:
        return self.j - self.i

    @property
    def q(self) -> int:
        return self.j // self.d

    @property
    def r(self) -> int:
        return self.j % self.d

    @property
    def t(self) -> int:
        return self.d - self.r


@dataclass(frozen=True)
class OrderResult:
    """An order together with the formula branch that produced it.

    ``value`` is None when no branch of the three-flip formula applies.
    """

    value: int | None
    case_label: str
    oracle_checked: bool = False

    @property
    def covered(self) -> bool:
        return self.value is not None

    def to_dict(self) -> dict:
        return {
            "value": self.value if self.value is not None else UNCOVERED,
            "case_label": self.case_label,
            "oracle_checked": self.oracle_checked,
        }


# -- oracles ---------------------------------------------------------------


def two_flips_oracle(a: int, b: int, n: int | None = None) -> int:
    """Order of f_a f_b computed from the permutation itself."""
    n = max(a, b) + 1 if n is None else n
    return element_order(compose(pancake_flip(a, n), pancake_flip(b, n)))


def two_burnt_flips_oracle(a: int, b: int, n: int | None = None) -> int:
    n = max(a, b) + 1 if n is None else n
    return element_order(compose(burnt_flip(a, n), burnt_flip(b, n)))


def three_flips_oracle(a: int, b: int, c: int, n: int | None = None) -> int:
    n = max(a, b, c) + 1 if n is None else n
    p = compose(compose(pancake_flip(a, n), pancake_flip(b, n)), pancake_flip(c, n))
    return element_order(p)


# -- two unsigned flips ----------------------------------------------------


def order_two_flips_formula(a: int, b: int) -> OrderResult:
    """Order of f_a f_b in any S_n with n > max(a, b)."""
    if a < 1 or b < 1:
        raise SubscriptError(f"pancake subscripts start at 1, got ({a}, {b})")
    if a == b:
        return OrderResult(1, "T1.1")
    i, j = min(a, b) + 1, max(a, b) + 1
    if (i, j) == (2, 3):
        return OrderResult(3, "T1.3")
    if i <= j // 2:
        return OrderResult(4, "T1.4a")
    if i == j - 1:
        return OrderResult(j, "T1.4c")
    case = TwoFlipCaseData(i, j)
    q, r, t = case.q, case.r, case.t
    if r == 0:
        return OrderResult(2 * q, "T1.4b.r0")
    even = q % 2 == 0
    r_tag = "r1" if r == 1 else "r2+"
    t_tag = "t1" if t == 1 else "t2+"
    label = f"T1.4b.{r_tag}{t_tag}"
    if r == 1 and t == 1:
        return OrderResult(q * (q + 1), label)
    if r >= 2 and t >= 2:
        return OrderResult(2 * q * (q + 1), label)
    if r == 1:  # t >= 2
        value = 2 * q * (q + 1) if even else q * (q + 1)
    else:  # r >= 2, t == 1
        value = q * (q + 1) if even else 2 * q * (q + 1)
    return OrderResult(value, label + (".qeven" if even else ".qodd"))


# -- two burnt flips -------------------------------------------------------


def order_two_burnt_flips_formula(a: int, b: int) -> OrderResult:
    """Order of f^B_a f^B_b in any B_n with n > max(a, b).

    Pairs involving f^B_0 (shifted frame i = 1) sit outside the published
    cases; they have order 4, which the oracle sweep confirms.
    """
    if a < 0 or b < 0:
        raise SubscriptError(f"burnt subscripts start at 0, got ({a}, {b})")
    if a == b:
        return OrderResult(1, "T4.1")
    i, j = min(a, b) + 1, max(a, b) + 1
    if i == 1:
        return OrderResult(4, "T4.ext-i1")
    if i == j - 1:
        return OrderResult(2 * j, "T4.5")
    if i <= j // 2:
        return OrderResult(4, "T4.3")
    case = TwoFlipCaseData(i, j)
    if case.r == 0:
        return OrderResult(2 * case.q, "T4.4.r0")
    return OrderResult(2 * case.q * (case.q + 1), "T4.4.r1+")


# -- three flips with f_1 first --------------------------------------------


def _lcm_branches(d: int, q: int, r: int) -> list[tuple[str, int]]:
    out = []
    # r < 2
    if r == 0 and d >= 4:
        out.append(("T3.5a.r0", 4 * q))
    if r == 1 and d == 2:
        out.append(("T3.5a.r1d2", 2 * q + 1))
    if r == 1 and (d == 4 or (d >= 5 and q % 2 == 1)):
        out.append(("T3.5a.r1.q(3q+1)", q * (3 * q + 1)))
    if r == 1 and d >= 5 and q % 2 == 0:
        out.append(("T3.5a.r1.2q(3q+1)", 2 * q * (3 * q + 1)))
    # r >= 2
    qq = q * (q + 1)
    if (
        (r == 2 and d == 3)
        or (r == 2 and d >= 4 and q % 2 == 1)
        or (r == 3 and d == 4 and q % 3 == 0)
        or (r == 3 and d >= 5 and q % 6 == 3)
        or (r >= 4 and d >= 5 and q % 4 == 0)
    ):
        out.append(("T3.5b.q(q+1)", qq))
    if (
        (r == 2 and d >= 4 and q % 2 == 0)
        or (r == 3 and d >= 5 and q % 6 == 0)
        or (r >= 4 and d >= 5 and q % 4 == 2)
    ):
        out.append(("T3.5b.2q(q+1)", 2 * qq))
    if (r == 3 and d == 4 and q % 3 != 0) or (r == 3 and d >= 5 and q % 6 in (1, 5)):
        out.append(("T3.5b.3q(q+1)", 3 * qq))
    if r >= 4 and d >= 5 and q % 2 == 1:
        out.append(("T3.5b.4q(q+1)", 4 * qq))
    if r == 3 and d >= 5 and q % 6 in (2, 4):
        out.append(("T3.5b.6q(q+1)", 6 * qq))
    return out


def three_flip_branches(b: int, c: int) -> list[tuple[str, int]]:
    """Every closed-form branch that applies to f_1 f_b f_c, in listed order.

    Returns ``(case_label, value)`` pairs; an empty list means the pair is
    not covered by any branch.
    """
    if b < 1 or c < 1:
        raise SubscriptError(f"pancake subscripts start at 1, got ({b}, {c})")
    if b > c:
        raise ValueError(f"need b <= c, got ({b}, {c})")
    j, k = b + 1, c + 1
    out: list[tuple[str, int]] = []
    if b == 1 or b == c:
        out.append(("T3.1", 2))
        return out
    if b == 2 and c >= 5:
        out.append(("T3.2", 6))
    if j == k - 1:
        out.append(("T3.3", k - 1))
    if (j == k - 2 and k % 2 == 1) or (j == k - 3 and k % 3 != 2):
        out.append(("T3.4", k))
    if k >= 5:
        d = k - j
        out.extend(_lcm_branches(d, k // d, k % d))
    return out


def order_three_flips_f1_formula(b: int, c: int) -> OrderResult:
    """Order of f_1 f_b f_c for 1 <= b <= c from the first matching branch."""
    branches = three_flip_branches(b, c)
    if not branches:
        return OrderResult(None, UNCOVERED)
    label, value = branches[0]
    return OrderResult(value, label)


def canonical_triple_order(a: int, b: int, c: int, n: int) -> OrderResult:
    """Order of f_a f_b f_c in S_n, reduced to sorted subscripts.

    The order does not depend on the order of the three factors (the six
    arrangements are conjugate or inverse to one another).
    """
    for s in (a, b, c):
        if not 1 <= s <= n - 1:
            raise SubscriptError(f"subscript {s} out of range 1..{n - 1}")
    if len({a, b, c}) < 3:
        return OrderResult(2, "L.repeat")
    lo, mid, hi = sorted((a, b, c))
    if lo == 1:
        res = order_three_flips_f1_formula(mid, hi)
        if res.covered:
            return res
        return OrderResult(three_flips_oracle(1, mid, hi, n), "oracle", True)
    return OrderResult(three_flips_oracle(lo, mid, hi, n), "oracle", True)


# -- matrices --------------------------------------------------------------


MATRIX_KINDS = ("pancake_S", "triple_f1", "burnt_B")


@dataclass(frozen=True)
class OrderMatrix:
    """Square table of product orders indexed by generator subscripts."""

    kind: str
    n: int
    labels: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]
    case_labels: tuple[tuple[str, ...], ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if self.kind not in MATRIX_KINDS:
            raise ValueError(f"unknown matrix kind {self.kind!r}")
        size = len(self.labels)
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ValueError("entries must be a square table matching the labels")

    def __getitem__(self, key: tuple[int, int]) -> int:
        a, b = key
        return self.entries[self.labels.index(a)][self.labels.index(b)]

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def is_symmetric(self) -> bool:
        size = len(self.labels)
        return all(
            self.entries[x][y] == self.entries[y][x] for x in range(size) for y in range(x)
        )

    def diagonal(self) -> list[int]:
        return [self.entries[x][x] for x in range(len(self.labels))]

    def drop_last(self) -> list[list[int]]:
        return [list(row[:-1]) for row in self.entries[:-1]]

    # serialization

    def to_text(self) -> str:
        return "".join(" ".join(map(str, row)) + "\n" for row in self.entries)

    def to_csv(self) -> str:
        lines = ["gen," + ",".join(map(str, self.labels))]
        for label, row in zip(self.labels, self.entries):
            lines.append(f"{label}," + ",".join(map(str, row)))
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "labels": list(self.labels),
            "entries": self.rows(),
            "case_labels": [list(row) for row in self.case_labels],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> OrderMatrix:
        return cls(
            kind=data["kind"],
            n=data["n"],
            labels=tuple(data["labels"]),
            entries=tuple(tuple(row) for row in data["entries"]),
            case_labels=tuple(tuple(row) for row in data.get("case_labels", ())),
        )

    @classmethod
    def from_text(cls, text: str, kind: str, n: int, labels) -> OrderMatrix:
        entries = tuple(
            tuple(int(tok) for tok in line.split()) for line in text.splitlines() if line.strip()
        )
        return cls(kind, n, tuple(labels), entries)


def _build(kind: str, n: int, labels, cell: Callable[[int, int], OrderResult]) -> OrderMatrix:
    entries, cases = [], []
    for a in labels:
        results = [cell(a, b) for b in labels]
        entries.append(tuple(res.value for res in results))
        cases.append(tuple(res.case_label for res in results))
    return OrderMatrix(kind, n, tuple(labels), tuple(entries), tuple(cases))


def pancake_matrix(n: int) -> OrderMatrix:
    """Orders of f_a f_b for 1 <= a, b <= n-1."""
    if n < 3:
        raise DegreeError(f"pancake matrix needs n >= 3, got {n}")
    return _build("pancake_S", n, range(1, n), order_two_flips_formula)


def _triple_cell(b: int, c: int) -> OrderResult:
    lo, hi = min(b, c), max(b, c)
    res = order_three_flips_f1_formula(lo, hi)
    if res.covered:
        return res
    return OrderResult(three_flips_oracle(1, lo, hi), "oracle", True)


def triple_matrix_f1(n: int) -> OrderMatrix:
    """Orders of f_1 f_b f_c for 1 <= b, c <= n-1; uncovered cells use the oracle."""
    if n < 3:
        raise DegreeError(f"triple matrix needs n >= 3, got {n}")
    return _build("triple_f1", n, range(1, n), _triple_cell)


def burnt_matrix(n: int) -> OrderMatrix:
    """Orders of f^B_a f^B_b for 0 <= a, b <= n-1."""
    if n < 2:
        raise DegreeError(f"burnt matrix needs n >= 2, got {n}")
    return _build("burnt_B", n, range(0, n), order_two_burnt_flips_formula)


ORACLES = {
    "pancake_S": two_flips_oracle,
    "burnt_B": two_burnt_flips_oracle,
    "triple_f1": lambda b, c: three_flips_oracle(1, b, c),
}


def oracle_mismatches(matrix: OrderMatrix) -> list[tuple[int, int, int, int, str]]:
    """Cells whose entry differs from the brute-force order.

    Returns ``(a, b, entry, oracle, case_label)`` tuples.
    """
    oracle = ORACLES[matrix.kind]
    out = []
    for x, a in enumerate(matrix.labels):
        for y, b in enumerate(matrix.labels):
            truth = oracle(a, b)
            if matrix.entries[x][y] != truth:
                label = matrix.case_labels[x][y] if matrix.case_labels else ""
                out.append((a, b, matrix.entries[x][y], truth, label))
    return out
