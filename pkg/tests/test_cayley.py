import pytest

from pancakegroups.cayley import (
    ADJACENCY_THRESHOLD,
    NoCycleError,
    bfs_distances,
    build_graph,
    diameter,
    eccentricity,
    export,
    girth,
    max_common_neighbors,
    published_bounds,
    triangle_count,
    two_generator_cycles,
    verify_chord_free,
)
from pancakegroups.errors import ResourceCapError, SubscriptError
from pancakegroups.flip_gens import flip
from pancakegroups.perm_core import Family, compose


@pytest.mark.parametrize("family, n, vertices, edges", [
    ("unsigned", 2, 2, 1), ("unsigned", 4, 24, 36), ("unsigned", 6, 720, 1800),
    ("signed", 1, 2, 1), ("signed", 3, 48, 72), ("signed", 5, 3840, 9600),
])
def test_sizes_and_regularity(family, n, vertices, edges):
    g = build_graph(family, n)
    assert len(g) == vertices
    assert g.edge_count() == edges == sum(1 for _ in g.edges())
    assert all(len(set(g.neighbors(v))) == g.degree for v in range(len(g)))
    assert all(v in g.neighbors(u) for u in range(len(g)) for v in g.neighbors(u))


def test_edges_are_right_multiplication():
    g = build_graph("signed", 3)
    for u in range(len(g)):
        for gen in g.generators:
            v = g.neighbor(u, gen)
            assert g.element(v) == compose(g.element(u), flip(gen, 3, Family.SIGNED))


def test_generators_at_distance_one():
    for family, n in (("unsigned", 5), ("signed", 4)):
        g = build_graph(family, n)
        dist = bfs_distances(g, g.identity)
        for gen in g.generators:
            assert dist[g.index[flip(gen, n, family).image if family == "unsigned"
                                else flip(gen, n, family).window]] == 1


def test_vertex_ranking():
    g = build_graph("signed", 2)
    assert [g.label(v) for v in range(len(g))] == [
        "[1 2]", "[1 -2]", "[-1 2]", "[-1 -2]", "[2 1]", "[2 -1]", "[-2 1]", "[-2 -1]"
    ]


def test_caps():
    with pytest.raises(ResourceCapError) as info:
        build_graph("unsigned", 10)
    assert info.value.estimate == 3628800
    with pytest.raises(ResourceCapError):
        build_graph("signed", 8)
    assert len(build_graph("unsigned", 3, cap=3)) == 6


@pytest.mark.parametrize("n", [2, 3])
def test_burnt_graph_has_no_triangle_or_k23(n):
    g = build_graph("signed", n)
    assert triangle_count(g) == 0
    assert max_common_neighbors(g) < 3


@pytest.mark.parametrize("family, n, expected", [
    ("signed", 2, 8), ("signed", 3, 8), ("signed", 4, 8),
    ("unsigned", 3, 6), ("unsigned", 4, 6), ("unsigned", 5, 6),
])
def test_girth(family, n, expected):
    assert girth(build_graph(family, n)) == expected


def test_acyclic_graph_has_no_girth():
    with pytest.raises(NoCycleError):
        girth(build_graph("unsigned", 2))


@pytest.mark.parametrize("family, values", [
    ("unsigned", {3: 3, 4: 4, 5: 5, 6: 7, 7: 8}),
    ("signed", {1: 1, 2: 4, 3: 6, 4: 8}),
])
def test_diameters(family, values):
    for n, d in values.items():
        assert diameter(build_graph(family, n)).diameter == d


def test_vertex_transitive_diameter_s5():
    g = build_graph("unsigned", 5)
    assert {eccentricity(g, v) for v in range(len(g))} == {5}


def test_diameter_report():
    rep = diameter(build_graph("unsigned", 7))
    assert (rep.lower_bound, rep.upper_bound) == (8, 8)
    assert rep.within_lower and rep.within_upper
    assert sum(rep.histogram) == 5040
    assert published_bounds("unsigned", 6) == (None, None)
    assert published_bounds("signed", 4) == (6, 6)


@pytest.mark.parametrize("n", [3, 4])
def test_two_generator_cycles_signed(n):
    g = build_graph("signed", n)
    for x, a in enumerate(g.generators):
        for b in g.generators[x + 1:]:
            fam = two_generator_cycles(g, a, b)
            assert len(fam.cycles) * fam.length == len(g)
            assert all(verify_chord_free(g, c) for c in fam.cycles)


def test_two_generator_cycle_examples():
    g = build_graph("signed", 3)
    assert (two_generator_cycles(g, 1, 2).length, len(two_generator_cycles(g, 1, 2).cycles)) == (12, 4)
    assert (two_generator_cycles(g, 0, 1).length, len(two_generator_cycles(g, 1, 0).cycles)) == (8, 6)
    with pytest.raises(SubscriptError):
        two_generator_cycles(g, 1, 1)
    with pytest.raises(SubscriptError):
        two_generator_cycles(g, 1, 3)


def _path_avoiding_edge(cycle, x, y):
    """Vertices of ``cycle`` from y round to x without using the edge x-y."""
    i, j = cycle.index(x), cycle.index(y)
    step = 1 if (j - i) % len(cycle) == 1 else -1
    path, k = [], j
    while True:
        path.append(cycle[k])
        if k == i:
            return path
        k = (k + step) % len(cycle)


def test_chord_detection():
    g = build_graph("unsigned", 4)
    first = two_generator_cycles(g, 1, 2).cycles[0]
    assert verify_chord_free(g, first)
    # glue two alternating cycles along a shared f_2 edge: the shared edge becomes a chord
    x = first[0]
    y = g.neighbor(x, 2)
    second = next(c for c in two_generator_cycles(g, 2, 3).cycles if x in c)
    glued = _path_avoiding_edge(list(first), x, y) + _path_avoiding_edge(list(second), y, x)[1:-1]
    assert len(set(glued)) == len(glued) == len(first) + len(second) - 2
    assert not verify_chord_free(g, glued)
    with pytest.raises(ValueError):
        verify_chord_free(g, first[:3])
    with pytest.raises(ValueError):
        verify_chord_free(g, [0, 0, 1])


def test_burnt_two_cycles_at_n2():
    fam = two_generator_cycles(build_graph("signed", 2), 0, 1)
    assert fam.length == 8 and len(fam.cycles) == 1


def test_exports():
    assert export(build_graph("unsigned", 2), "edge_list") == "0 1 1\n"
    csv = export(build_graph("unsigned", 4), "csv").splitlines()
    assert csv[0] == "u,v,gen" and len(csv) == 37
    dot = export(build_graph("signed", 2), "dot")
    assert dot.count("label=") == 8
    assert dot.count(" -- ") == 8
    assert {line.split("gen=")[1].split(",")[0] for line in dot.splitlines() if "gen=" in line} == {"0", "1"}
    with pytest.raises(ValueError):
        export(build_graph("unsigned", 2), "graphml")


def test_large_graph_computes_neighbours_on_the_fly():
    g = build_graph("unsigned", 9)
    assert len(g) > ADJACENCY_THRESHOLD
    assert "adjacency" not in g.__dict__
    v = g.neighbor(g.identity, 8)
    assert g.label(v) == "9 8 7 6 5 4 3 2 1"
    assert "adjacency" not in g.__dict__
