"""Pancake graphs of S_n and burnt pancake graphs of B_n.

Vertices are group elements, ranked lexicographically by their one-line
(or window) form; signed entries compare by magnitude first, with the
positive value before the negative one. Vertex ``w`` is joined to ``w f_i``
for every generator, and the edge carries the subscript ``i``.

Diameters come from one BFS rooted at the identity: a Cayley graph is
vertex-transitive, so every vertex has the same eccentricity.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property

from .closed_forms import two_burnt_flips_oracle, two_flips_oracle
from .errors import PancakeError, ResourceCapError, SubscriptError
from .flip_gens import subscript_range
from .perm_core import Family, Permutation, SignedPermutation, point_key

DEFAULT_CAPS = {Family.UNSIGNED: 9, Family.SIGNED: 7}
# above this many vertices neighbours are recomputed instead of stored
ADJACENCY_THRESHOLD = 50_000

DOT_COLORS = ("red", "blue", "purple", "darkgreen", "orange", "brown", "magenta", "cyan",
              "olive", "navy")


class NoCycleError(PancakeError):
    pass


def vertex_count(family: Family | str, n: int) -> int:
    if Family(family) is Family.UNSIGNED:
        return math.factorial(n)
    return 2**n * math.factorial(n)


def _flip_tuple(w: tuple[int, ...], i: int, signed: bool) -> tuple[int, ...]:
    if signed:
        return tuple(-x for x in w[i::-1]) + w[i + 1:]
    return w[i::-1] + w[i + 1:]


def _ranked_states(family: Family, n: int) -> list[tuple[int, ...]]:
    if family is Family.UNSIGNED:
        return list(itertools.permutations(range(1, n + 1)))
    states = [
        tuple(s * v for s, v in zip(signs, image))
        for image in itertools.permutations(range(1, n + 1))
        for signs in itertools.product((1, -1), repeat=n)
    ]
    states.sort(key=lambda w: [point_key(x) for x in w])
    return states


@dataclass(eq=False)
class CayleyGraph:
    """Generator-labelled Cayley graph; build it with :func:`build_graph`."""

    family: Family
    n: int
    states: list[tuple[int, ...]] = field(repr=False)

    def __post_init__(self) -> None:
        self.index = {w: v for v, w in enumerate(self.states)}
        self.generators = tuple(subscript_range(self.family, self.n))
        self._signed = self.family is Family.SIGNED

    def __len__(self) -> int:
        return len(self.states)

    @property
    def degree(self) -> int:
        return len(self.generators)

    @property
    def identity(self) -> int:
        return self.index[tuple(range(1, self.n + 1))]

    def element(self, v: int) -> Permutation | SignedPermutation:
        if self._signed:
            return SignedPermutation(self.states[v])
        return Permutation(self.states[v])

    def label(self, v: int) -> str:
        return str(self.element(v))

    def neighbor(self, v: int, gen: int) -> int:
        if len(self.states) <= ADJACENCY_THRESHOLD:
            return self.adjacency[v][self.generators.index(gen)]
        return self.index[_flip_tuple(self.states[v], gen, self._signed)]

    def neighbors(self, v: int) -> tuple[int, ...]:
        if len(self.states) <= ADJACENCY_THRESHOLD:
            return self.adjacency[v]
        w = self.states[v]
        return tuple(self.index[_flip_tuple(w, g, self._signed)] for g in self.generators)

    @cached_property
    def adjacency(self) -> list[tuple[int, ...]]:
        """Row v lists the neighbours of v, one per generator in subscript order."""
        index, signed = self.index, self._signed
        return [
            tuple(index[_flip_tuple(w, g, signed)] for g in self.generators)
            for w in self.states
        ]

    def edges(self):
        """Yield ``(u, v, gen)`` with ``u < v``, each undirected edge once."""
        for u in range(len(self.states)):
            for gen, v in zip(self.generators, self.neighbors(u)):
                if u < v:
                    yield u, v, gen

    def edge_count(self) -> int:
        return len(self.states) * self.degree // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors(u)


def build_graph(family: Family | str, n: int, cap: int | None = None) -> CayleyGraph:
    family = Family(family)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    cap = DEFAULT_CAPS[family] if cap is None else cap
    if n > cap:
        size = vertex_count(family, n)
        raise ResourceCapError(
            f"{family} pancake graph at n={n} has {size} vertices; cap is n <= {cap}",
            estimate=size,
        )
    return CayleyGraph(family, n, _ranked_states(family, n))


# -- distances ---------------------------------------------------------------


def bfs_distances(graph: CayleyGraph, source: int) -> list[int]:
    dist = [-1] * len(graph)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in graph.neighbors(u):
            if dist[v] < 0:
                dist[v] = du
                queue.append(v)
    return dist


def eccentricity(graph: CayleyGraph, source: int) -> int:
    return max(bfs_distances(graph, source))


@dataclass(frozen=True)
class DiameterReport:
    family: Family
    n: int
    diameter: int
    source: str
    histogram: tuple[int, ...]
    lower_bound: float | None
    upper_bound: float | None

    @property
    def within_lower(self) -> bool | None:
        return None if self.lower_bound is None else self.diameter >= self.lower_bound

    @property
    def within_upper(self) -> bool | None:
        return None if self.upper_bound is None else self.diameter <= self.upper_bound

    def to_dict(self) -> dict:
        return {
            "family": str(self.family),
            "n": self.n,
            "diameter": self.diameter,
            "source": self.source,
            "histogram": list(self.histogram),
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "within_lower": self.within_lower,
            "within_upper": self.within_upper,
        }


def published_bounds(family: Family | str, n: int) -> tuple[float | None, float | None]:
    """Literature bounds on the diameter: ``n+1 <= f(n) <= 2n-6`` for n >= 7
    (unsigned) and ``3n/2 <= g(n) <= 2n-2`` (signed).

    The signed range is reported for comparison only; small graphs exceed
    its upper end.
    """
    if Family(family) is Family.UNSIGNED:
        return (n + 1, 2 * n - 6) if n >= 7 else (None, None)
    return (3 * n / 2, 2 * n - 2) if n >= 2 else (None, None)


def diameter(graph: CayleyGraph) -> DiameterReport:
    dist = bfs_distances(graph, graph.identity)
    diam = max(dist)
    hist = [0] * (diam + 1)
    for d in dist:
        hist[d] += 1
    low, high = published_bounds(graph.family, graph.n)
    return DiameterReport(
        graph.family, graph.n, diam, graph.label(graph.identity), tuple(hist), low, high
    )


def girth(graph: CayleyGraph) -> int:
    """Length of the shortest simple cycle, by a BFS from every vertex."""
    best = math.inf
    for root in range(len(graph)):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in graph.neighbors(u):
                if v not in dist:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    best = min(best, dist[u] + dist[v] + 1)
    if best is math.inf:
        raise NoCycleError(f"the {graph.family} pancake graph at n={graph.n} has no cycle")
    return int(best)


def triangle_count(graph: CayleyGraph) -> int:
    count = 0
    for u in range(len(graph)):
        nbrs = set(graph.neighbors(u))
        for v in nbrs:
            if v > u:
                count += sum(1 for x in graph.neighbors(v) if x > v and x in nbrs)
    return count


def max_common_neighbors(graph: CayleyGraph) -> int:
    """Largest number of common neighbours of two distinct vertices (3 means a K_{2,3})."""
    best = 0
    for u in range(len(graph)):
        counts: dict[int, int] = {}
        for v in graph.neighbors(u):
            for x in graph.neighbors(v):
                if x != u:
                    counts[x] = counts.get(x, 0) + 1
        if counts:
            best = max(best, max(counts.values()))
    return best


# -- two-generator cycles ----------------------------------------------------


@dataclass(frozen=True)
class CycleFamily:
    """Vertex-disjoint cycles traced by alternating f_a and f_b edges."""

    a: int
    b: int
    length: int
    cycles: tuple[tuple[int, ...], ...]

    @property
    def half_length(self) -> int:
        return self.length // 2

    def to_dict(self) -> dict:
        return {"gens": [self.a, self.b], "length": self.length, "half_length": self.half_length,
                "count": len(self.cycles)}


def two_generator_cycles(graph: CayleyGraph, a: int, b: int) -> CycleFamily:
    if a == b:
        raise SubscriptError("two distinct generators are required")
    for s in (a, b):
        if s not in graph.generators:
            raise SubscriptError(f"subscript {s} is not a generator of this graph")
    a, b = min(a, b), max(a, b)
    order_of = two_flips_oracle if graph.family is Family.UNSIGNED else two_burnt_flips_oracle
    expected = 2 * order_of(a, b, graph.n)
    seen = [False] * len(graph)
    cycles = []
    for start in range(len(graph)):
        if seen[start]:
            continue
        cycle = []
        v, step = start, 0
        while True:
            cycle.append(v)
            seen[v] = True
            v = graph.neighbor(v, a if step % 2 == 0 else b)
            step += 1
            if v == start and step % 2 == 0:
                break
            if seen[v]:
                raise AssertionError(f"alternating walk from {start} is not a simple cycle")
        cycles.append(tuple(cycle))
    lengths = {len(c) for c in cycles}
    if lengths != {expected}:
        raise AssertionError(f"cycle lengths {sorted(lengths)} differ from 2*order = {expected}")
    if len(cycles) * expected != len(graph):
        raise AssertionError("cycles do not partition the vertex set")
    return CycleFamily(a, b, expected, tuple(cycles))


def verify_chord_free(graph: CayleyGraph, cycle) -> bool:
    """True iff no edge joins two non-consecutive vertices of ``cycle``."""
    cycle = list(cycle)
    size = len(cycle)
    if size < 3 or len(set(cycle)) != size:
        raise ValueError("not a simple cycle: vertices must be distinct and at least 3")
    position = {v: p for p, v in enumerate(cycle)}
    for p, v in enumerate(cycle):
        if not graph.has_edge(v, cycle[(p + 1) % size]):
            raise ValueError(f"not a cycle of the graph: {v} and {cycle[(p + 1) % size]} are not adjacent")
    for p, v in enumerate(cycle):
        for x in graph.neighbors(v):
            q = position.get(x)
            if q is not None and (q - p) % size not in (1, size - 1):
                return False
    return True


# -- export ------------------------------------------------------------------

EXPORT_FORMATS = ("edge_list", "dot", "csv")


def export(graph: CayleyGraph, fmt: str = "edge_list") -> str:
    edges = sorted(graph.edges())
    if fmt == "edge_list":
        return "".join(f"{u} {v} {g}\n" for u, v, g in edges)
    if fmt == "csv":
        return "u,v,gen\n" + "".join(f"{u},{v},{g}\n" for u, v, g in edges)
    if fmt == "dot":
        lines = [f'graph "{graph.family}_pancake_{graph.n}" {{']
        for v in range(len(graph)):
            lines.append(f'  {v} [label="{graph.label(v)}"];')
        for u, v, g in edges:
            color = DOT_COLORS[g % len(DOT_COLORS)]
            lines.append(f'  {u} -- {v} [gen={g}, color="{color}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown export format {fmt!r}; choose from {', '.join(EXPORT_FORMATS)}")
