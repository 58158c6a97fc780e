import random

import pytest
from hypothesis import given, settings, strategies as st

from turanlab import (
    CapacityError,
    Graph,
    Pattern,
    SpecError,
    build,
    ConstructionSpec,
    chromatic_number,
    color_critical_edges,
    contains_pattern,
    count_double_star_edge,
    count_pattern,
)
from turanlab.formulas import DoubleStarParams, f_value
from turanlab.oracle import enumerate_forbidden_free
from turanlab.patterns import contains_pattern_through

import brute

C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
K15 = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
FAN2 = Pattern.fan2().graph()

SMALL_PATTERNS = [
    Pattern.double_star(1, 1),
    Pattern.double_star(1, 2),
    Pattern.double_star(2, 2),
    Pattern.clique(3),
    Pattern.clique(4),
    Pattern.book(1),
    Pattern.book(2),
    Pattern.fan2(),
    Pattern.complete_bipartite(2, 2),
    Pattern.complete_bipartite(1, 3),
    Pattern.generic(C5),
]


def test_parse_round_trip():
    for text in ("dstar:1,2", "clique:4", "book:3", "fan2", "kbip:2,3", "g6:Dhc"):
        assert str(Pattern.parse(text)) == text
    assert Pattern.parse("dstar:3,1") == Pattern.double_star(1, 3)
    for bad in ("dstar:0,1", "clique:1", "book:0", "kbip:0,2", "nope:1", "dstar:1", "clique:x", "g6:A"):
        with pytest.raises(SpecError):
            Pattern.parse(bad)
    with pytest.raises(CapacityError):
        Pattern.generic(Graph.empty(11))


def test_double_star_edge_examples():
    assert count_double_star_edge(Graph.complete(4), 0, 1, 1, 1) == 2
    assert count_double_star_edge(C4, 0, 1, 1, 1) == 1
    assert count_double_star_edge(K15, 0, 1, 1, 2) == 0
    with pytest.raises(SpecError):
        count_double_star_edge(C4, 0, 2, 1, 1)


def test_k4_edge_matches_hand_enumeration():
    # P_4s through central edge 01 of K_4: leaves (2,3) or (3,2)
    assert brute.double_stars_on_edge(Graph.complete(4), 0, 1, 1, 1) == 2


def test_count_examples():
    assert count_pattern(Graph.complete(4), Pattern.clique(3)) == 4
    assert count_pattern(C4, Pattern.double_star(1, 1)) == 4
    assert brute.count_copies(C4, Pattern.double_star(1, 1).graph()) == 4
    for a in range(1, 4):
        for b in range(a, 4):
            kab = build(ConstructionSpec("kbipartite", (a + 1, b + 1)))
            assert count_pattern(kab, Pattern.double_star(a, b)) == (a + 1) * (b + 1)


def test_contains_examples():
    assert not contains_pattern(K15, Pattern.double_star(2, 2))
    assert contains_pattern(Graph.complete(4), Pattern.book(2))
    assert not contains_pattern(build(ConstructionSpec.parse("kbipartite+:3,3")), Pattern.fan2())


def test_coloring_examples():
    assert chromatic_number(Graph.complete(3)) == 3
    assert chromatic_number(C5) == 3
    assert chromatic_number(FAN2) == 3
    assert len(color_critical_edges(Graph.complete(3))) == 3
    assert color_critical_edges(FAN2) == []
    assert len(color_critical_edges(C5)) == 5


def test_coloring_against_brute_force():
    rng = random.Random(5)
    for _ in range(40):
        g = brute.random_graph(rng.randint(1, 7), rng.random(), rng)
        assert chromatic_number(g) == brute.chromatic(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.floats(0, 1), st.integers(0, 2**32), st.sampled_from(SMALL_PATTERNS[:-1]))
def test_generic_count_matches_image_enumeration(n, p, seed, pattern):
    g = brute.random_graph(n, p, random.Random(seed))
    if pattern.order <= 6:
        assert count_pattern(g, pattern) == brute.count_copies(g, pattern.graph())


@settings(max_examples=80, deadline=None)
@given(st.integers(2, 8), st.floats(0, 1), st.integers(0, 2**32), st.integers(1, 3), st.integers(1, 3))
def test_edge_count_matches_leaf_enumeration(n, p, seed, a, b):
    g = brute.random_graph(n, p, random.Random(seed))
    for u, v in g.edges():
        assert count_double_star_edge(g, u, v, a, b) == brute.double_stars_on_edge(g, u, v, a, b)


def test_fast_paths_match_generic_on_random_graphs():
    rng = random.Random(2024)
    for i in range(200):
        g = brute.random_graph(rng.randint(1, 10), (0.2, 0.5, 0.8)[i % 3], rng)
        for a in range(1, 4):
            for b in range(a, 5 - a):
                p = Pattern.double_star(a, b)
                assert count_pattern(g, p) == count_pattern(g, p, method="generic")
        for k in range(2, 6):
            p = Pattern.clique(k)
            assert count_pattern(g, p) == count_pattern(g, p, method="generic")


def test_containment_consistency_up_to_7():
    for n in range(8):
        for g in enumerate_forbidden_free(n, None):
            for p in SMALL_PATTERNS:
                has = contains_pattern(g, p)
                assert has == (count_pattern(g, p) > 0)
                assert has == contains_pattern(g, p, method="generic")


def test_through_vertex_agrees_with_full_check():
    rng = random.Random(9)
    for _ in range(300):
        g = brute.random_graph(rng.randint(2, 8), rng.random(), rng)
        v = g.n - 1
        rest = g.induced(list(range(g.n - 1)))
        for p in (Pattern.clique(3), Pattern.clique(4), Pattern.fan2(), Pattern.book(1), Pattern.book(2)):
            if not contains_pattern(rest, p):
                assert contains_pattern_through(g, p, v) == contains_pattern(g, p)


def test_triangle_free_reduction_to_f():
    for n in range(2, 9):
        for g in enumerate_forbidden_free(n, Pattern.clique(3)):
            for u, v in g.edges():
                for a in range(1, 4):
                    for b in range(a, 5 - a):
                        expected = f_value(g.degree(u), g.degree(v), DoubleStarParams(a, b))
                        assert count_double_star_edge(g, u, v, a, b) == expected


def test_unique_central_edge():
    rng = random.Random(17)
    for _ in range(30):
        g = brute.random_graph(rng.randint(2, 7), rng.random(), rng)
        for a, b in ((1, 1), (1, 2), (2, 2)):
            per_edge = sum(count_double_star_edge(g, u, v, a, b) for u, v in g.edges())
            assert per_edge == brute.count_copies(g, Pattern.double_star(a, b).graph())


@pytest.mark.slow
def test_kab_inequality_up_to_8():
    for n in range(9):
        for g in enumerate_forbidden_free(n, None):
            for a in (1, 2):
                for b in (a, 2):
                    kab = count_pattern(g, Pattern.complete_bipartite(a + 1, b + 1))
                    assert kab <= (a + 1) * (b + 1) * count_pattern(g, Pattern.double_star(a, b))
