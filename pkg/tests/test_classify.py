import random

import networkx as nx
import pytest

from srpowers.canonical import canonical_form, graph_canonical_form
from srpowers.classify import (
    PLANS, SearchStats, enumerate_pure_2complexes, enumerate_ramsey_graphs, verify_classification,
)
from srpowers.complex import from_mask
from srpowers.graphs import SimpleGraph, is_ramsey, ramsey43_cycle_property
from srpowers.ideal import powers_equal


def atlas_ramsey_count(n, s, t):
    count = 0
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != n:
            continue
        if max((len(c) for c in nx.find_cliques(g)), default=0) >= s:
            continue
        if max((len(c) for c in nx.find_cliques(nx.complement(g))), default=0) >= t:
            continue
        count += 1
    return count


@pytest.mark.parametrize("s,t", [(3, 3), (4, 3), (5, 3)])
def test_ramsey_counts_match_graph_atlas(s, t):
    for n in range(1, 8):
        if (s, t) == (3, 3) and n > 6:
            break
        assert len(enumerate_ramsey_graphs(n, s, t)) == atlas_ramsey_count(n, s, t), (n, s, t)


def test_ramsey_43_beyond_the_atlas():
    assert [len(enumerate_ramsey_graphs(n, 4, 3)) for n in (8, 9)] == [3, 0]
    for n in (7, 8):
        for cf in enumerate_ramsey_graphs(n, 4, 3):
            g = cf.to_graph()
            assert is_ramsey(g, 4, 3)
            assert ramsey43_cycle_property(g).holds


def test_ramsey_errors():
    with pytest.raises(ValueError):
        enumerate_ramsey_graphs(9, 5, 3)
    with pytest.raises(ValueError):
        enumerate_ramsey_graphs(4, 1, 3)


def test_unpruned_counts(all_pure):
    counts = {n: len(cxs) for n, cxs in all_pure.items()}
    assert counts == {5: 29, 6: 2102}
    for cxs in all_pure.values():
        forms = [canonical_form(c) for c in cxs]
        assert len(set(forms)) == len(forms)
        assert all(c.is_pure() and c.dim == 2 for c in cxs)


def test_isomorphism_closure(all_pure):
    rng = random.Random(20261014)
    for n, cxs in all_pure.items():
        forms = {canonical_form(c) for c in cxs}
        for _ in range(100):
            cx = rng.choice(cxs)
            perm = list(range(1, n + 1))
            rng.shuffle(perm)
            assert canonical_form(cx.relabel(perm)) in forms


def test_pruners_are_sound(all_pure, equal_table):
    for n in (5, 6):
        full = all_pure[n]
        eq2 = {canonical_form(c) for c, e in zip(full, equal_table(n, 2)) if e}
        eq3 = {canonical_form(c) for c, e in zip(full, equal_table(n, 3)) if e}
        exact = {canonical_form(c) for c in enumerate_pure_2complexes(n, "thm_2_2")}
        assert exact == eq2
        assert eq2 <= {canonical_form(c) for c in enumerate_pure_2complexes(n, "eq2")}
        assert eq3 <= {canonical_form(c) for c in enumerate_pure_2complexes(n, "eq3")}


def test_eight_vertex_survivors_are_ramsey():
    stats = SearchStats()
    cxs = list(enumerate_pure_2complexes(8, "eq2", stats))
    assert stats.emitted == len(cxs) and stats.graphs > 0
    for cx in cxs:
        assert is_ramsey(cx.edge_graph(), 5, 3)


def test_equality_is_monotone_in_m(all_pure, equal_table):
    for n in (5, 6):
        e2, e3, e4 = (equal_table(n, m) for m in (2, 3, 4))
        assert all(b <= a for a, b in zip(e2, e3))
        assert all(b <= a for a, b in zip(e3, e4))
    for cx in enumerate_pure_2complexes(7, "eq3"):
        if powers_equal(cx, 3).equal:
            assert powers_equal(cx, 2).equal


def test_enumeration_errors():
    with pytest.raises(ValueError):
        list(enumerate_pure_2complexes(7))
    with pytest.raises(ValueError):
        list(enumerate_pure_2complexes(4, "eq2"))
    with pytest.raises(ValueError):
        list(enumerate_pure_2complexes(6, "bogus"))


def test_verify_small_cases():
    rep = verify_classification("3.8", [5, 6])
    assert rep.matched and rep.counts() == {5: 2, 6: 3}
    assert rep.results[0].details["complete_intersection"] == [True, True]
    pruned = verify_classification("3.8", [6], pruner="eq2")
    assert pruned.results[0].survivors == rep.results[1].survivors
    rep23 = verify_classification("2.3")
    assert rep23.matched and rep23.results[0].details["equal_at_4_same_set"]
    assert set(PLANS) == {"2.3", "2.5", "3.8", "3.9"}
    with pytest.raises(ValueError):
        verify_classification("9.9")
    with pytest.raises(ValueError):
        verify_classification("2.5", [5])


def test_heptagon_is_the_graph_c7(named):
    mins = named("heptagon").minimal_nonface_masks()
    assert all(h.bit_count() == 2 for h in mins)
    g = SimpleGraph.from_edges(7, [from_mask(h) for h in mins])
    assert graph_canonical_form(g) == graph_canonical_form(SimpleGraph.cycle(7))
