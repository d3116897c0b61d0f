"""Acceptance criteria 1-6, each reported as one line in the terminal summary."""

import random
import time
from contextlib import contextmanager

import pytest

from srpowers.canonical import canonical_form
from srpowers.classify import enumerate_pure_2complexes, enumerate_ramsey_graphs, verify_classification
from srpowers.covers import is_m_cover
from srpowers.criteria import (
    equality_verdict, is_matroid, matroid_clauses_dim2, symbolic_cm2, symbolic_cm2_by_subcomplexes,
    thm_2_2,
)
from srpowers.fixtures import expected_complexes
from srpowers.graphs import ramsey43_cycle_property
from srpowers.homology import is_cohen_macaulay, reduced_betti
from srpowers.ideal import power, powers_equal, stanley_reisner_ideal

from conftest import ACCEPTANCE_LINES


@contextmanager
def criterion(label, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        ACCEPTANCE_LINES.append(f"{status} criterion {label} ({elapsed:.1f}s, limit {limit:.0f}s)")
        print(ACCEPTANCE_LINES[-1])
    assert within, f"criterion {label} took {elapsed:.1f}s"


def both_routes(cx, m):
    rep = equality_verdict(cx, m)
    oracle = powers_equal(cx, m)
    assert rep.applicable
    assert rep.holds == oracle.equal
    return oracle


def test_criterion_1_equality_table(named):
    with criterion("1: equality table on named fixtures", 10):
        for name in ("fixture_a", "fixture_b", "octahedron"):
            for m in (2, 3, 4, 5):
                assert both_routes(named(name), m).equal, (name, m)
        hept = named("heptagon")
        assert both_routes(hept, 2).equal and both_routes(hept, 3).equal
        assert both_routes(hept, 4).witness == (1,) * 7
        assert not both_routes(hept, 5).equal
        dom = named("dominating_vertex")
        assert both_routes(dom, 2).equal and not both_routes(dom, 3).equal
        pc = named("pentagon_complement")
        for m in (2, 3, 4):
            assert not both_routes(pc, m).equal


@pytest.mark.xfail(strict=True, reason="(1,...,1) sums to 4 < 5 on every facet complement of the "
                                       "heptagon complex, so it is not a 5-cover and cannot witness m=5")
def test_criterion_1_heptagon_m5_all_ones_witness(named):
    hept = named("heptagon")
    ACCEPTANCE_LINES.append("XFAIL criterion 1 sub-claim: heptagon m=5 witness all-ones "
                            "(not a 5-cover; the least witness is (1,1,1,1,1,2,2))")
    assert is_m_cover(hept, (1,) * 7, 5)
    assert powers_equal(hept, 5).witness == (1,) * 7


def test_criterion_2_second_power_exhaustive(all_pure, equal_table):
    with criterion("2: second-power criterion on all 6-vertex complexes", 600):
        disagreements = [cx for cx, eq in zip(all_pure[6], equal_table(6, 2)) if thm_2_2(cx).holds != eq]
        assert len(all_pure[6]) == 2102
        assert disagreements == []


def test_criterion_3_classifications():
    with criterion("3: second and higher power CM classifications", 600):
        r38 = verify_classification("3.8")
        assert r38.counts() == {5: 2, 6: 3, 7: 2, 8: 1}
        assert r38.matched
        r39 = verify_classification("3.9", [5, 6])
        assert r39.counts() == {5: 2, 6: 1}
        assert r39.matched


def test_criterion_4_ramsey():
    with criterion("4: Ramsey (4,3) graphs", 900):
        assert enumerate_ramsey_graphs(9, 4, 3) == []
        assert enumerate_ramsey_graphs(8, 4, 3) != []
        for n in (7, 8):
            for cf in enumerate_ramsey_graphs(n, 4, 3):
                assert ramsey43_cycle_property(cf.to_graph()).holds


def test_criterion_5_homology_spot_checks(named):
    with criterion("5: homology and CM spot checks", 60):
        assert reduced_betti(named("octahedron")).ranks == (0, 0, 1)
        for n in (5, 6, 7, 8):
            for cx in expected_complexes("3.8", n):
                for field in (None, 2, 3):
                    assert is_cohen_macaulay(cx, field), (cx, field)
        rep = symbolic_cm2(named("heptagon"))
        assert rep.fails
        inter = rep.witness["ii"]["intersection"]
        assert sorted(inter) == [(4, 6), (5,)]


def test_criterion_6_property_suites(all_pure, equal_table, cm2_six):
    with criterion("6: property suites", 600):
        for n in (5, 6):
            for cx in all_pure[n][::7]:
                for m in (2, 3):
                    assert all(is_m_cover(cx, g, m) for g in power(stanley_reisner_ideal(cx), m).gens)
            e2, e3, e4 = (equal_table(n, m) for m in (2, 3, 4))
            assert all(b <= a for a, b in zip(e2, e3)) and all(b <= a for a, b in zip(e3, e4))
        for cx in enumerate_pure_2complexes(7, "eq3"):
            if powers_equal(cx, 3).equal:
                assert powers_equal(cx, 2).equal
        for cx, ok in cm2_six:
            assert ok == symbolic_cm2_by_subcomplexes(cx).holds
        for n in (5, 6):
            for cx in all_pure[n]:
                assert is_matroid(cx).holds == matroid_clauses_dim2(cx).holds
        rng = random.Random(7)
        for n in (5, 6):
            forms = {canonical_form(c) for c in all_pure[n]}
            for _ in range(100):
                perm = list(range(1, n + 1))
                rng.shuffle(perm)
                assert canonical_form(rng.choice(all_pure[n]).relabel(perm)) in forms
