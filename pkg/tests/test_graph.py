import pytest
from hypothesis import given, strategies as st

from turanlab import CapacityError, Graph, SpecError, common_neighbor_count, get_cap

from brute import random_graph


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


@given(graphs())
def test_adjacency_invariants(g):
    for v in range(g.n):
        assert not g.has_edge(v, v)
        assert g.degree(v) == len(g.neighbors(v))
        for u in g.neighbors(v):
            assert g.has_edge(u, v)
    assert sum(g.degrees()) == 2 * g.num_edges() == 2 * len(g.edges())


def test_rejects_asymmetric_and_loops():
    with pytest.raises(SpecError):
        Graph(2, (0b10, 0))
    with pytest.raises(SpecError):
        Graph(1, (0b1,))
    with pytest.raises(SpecError):
        Graph.from_edges(3, [(0, 3)])


def test_cap_env_override(monkeypatch):
    assert get_cap() == 64
    monkeypatch.setenv("TURANLAB_CAP", "5")
    with pytest.raises(CapacityError):
        Graph.empty(6)
    Graph.empty(5)


def test_common_neighbor_examples():
    k4 = Graph.complete(4)
    assert common_neighbor_count(k4, 0, 1) == 2
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert common_neighbor_count(c4, 0, 1) == 0
    assert common_neighbor_count(c4, 0, 2) == 2
    with pytest.raises(SpecError):
        common_neighbor_count(c4, 1, 1)
    with pytest.raises(SpecError):
        common_neighbor_count(c4, 0, 4)


def test_relabel_and_complement():
    import random

    g = random_graph(7, 0.5, random.Random(3))
    perm = [3, 6, 0, 1, 5, 2, 4]
    h = g.relabel(perm)
    assert {tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()} == set(h.edges())
    assert g.complement().num_edges() == 21 - g.num_edges()
    assert not Graph.complete(3).is_triangle_free()
    assert Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).is_bipartite()
