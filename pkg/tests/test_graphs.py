from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from srpowers.graphs import (
    SimpleGraph, complement, find_clique, find_disjoint_edges, find_disjoint_triangles,
    find_independent_set, find_induced_cycle, has_induced_cycle, is_bipartite, is_ramsey,
    ramsey43_cycle_property, two_colouring,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return SimpleGraph.from_edges(n, edges)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(1, g.n + 1))
    h.add_edges_from(g.edges())
    return h


def brute_induced_cycle(g, k):
    for vs in combinations(range(1, g.n + 1), k):
        sub = g.induced(vs)
        if len(sub.edges()) == k and all(sub.degree(v) == 2 for v in range(1, k + 1)) \
                and nx.is_connected(to_nx(sub)):
            return True
    return False


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_clique_number_matches_networkx(g):
    omega = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert find_clique(g, omega) is not None
    assert find_clique(g, omega + 1) is None


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_bipartite_matches_networkx(g):
    assert is_bipartite(g) == nx.is_bipartite(to_nx(g))
    col = two_colouring(g)
    if col is not None:
        assert all(col[u - 1] != col[v - 1] for u, v in g.edges())


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_induced_cycles_match_brute_force(g):
    for k in range(3, g.n + 1):
        cyc = find_induced_cycle(g, k)
        assert (cyc is not None) == brute_induced_cycle(g, k)
        if cyc is not None:
            sub = g.induced(cyc)
            assert all(sub.has_edge(i, i % k + 1) for i in range(1, k + 1))
            assert len(sub.edges()) == k


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_matchings_and_triangle_packings(g):
    nu = len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
    if nu:
        assert find_disjoint_edges(g, nu) is not None
    assert find_disjoint_edges(g, nu + 1) is None
    tris = find_disjoint_triangles(g, 1)
    assert (tris is not None) == any(len(c) >= 3 for c in nx.find_cliques(to_nx(g)))


def test_named_graphs():
    c5 = SimpleGraph.cycle(5)
    assert is_ramsey(c5, 3, 3)
    assert complement(c5).edges() == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
    assert find_independent_set(SimpleGraph.complete(4), 2) is None
    assert has_induced_cycle(SimpleGraph.cycle(7), 7)
    assert not has_induced_cycle(SimpleGraph.complete(5), 4)
    with pytest.raises(ValueError):
        is_ramsey(c5, 1, 3)


def test_ramsey43_cycle_property_rejects_bad_input():
    with pytest.raises(ValueError):
        ramsey43_cycle_property(SimpleGraph.cycle(6))
    with pytest.raises(ValueError):
        ramsey43_cycle_property(SimpleGraph.empty(7))


def test_ramsey43_cycle_property_on_heptagon_graph(named):
    g = named("heptagon").edge_graph()
    rep = ramsey43_cycle_property(g)
    assert rep.holds
    assert rep.conditions["induced_7_cycle"]
