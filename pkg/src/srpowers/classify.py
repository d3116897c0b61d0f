"""Exhaustive enumeration of pure two-dimensional complexes up to isomorphism.

Two strategies:

* ``pruner="none"`` (n <= 6): every subset of the triples that covers all
  vertices, reduced to orbit representatives under S_n with numpy lookup
  tables.  This is the unpruned reference.
* any other pruner: first all candidate edge graphs (Ramsey graphs built
  vertex by vertex, each isomorphism class once), then a backtracking search
  over subsets of each graph's triangles.  Every graph edge must lie in a
  chosen triangle, so the edge graph of each leaf is exactly the candidate.
  The pruners impose necessary conditions for equality of powers as clauses on
  the triangle variables.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterator

import numpy as np

from .canonical import CanonicalForm, canonical_form, graph_canonical_form
from .complex import SimplicialComplex, antichain
from .graphs import SimpleGraph, _find_clique
from .ideal import is_complete_intersection, powers_equal, stanley_reisner_ideal

MIN_N, MAX_N = 5, 8
UNPRUNED_MAX_N = 6


@dataclass
class SearchStats:
    graphs: int = 0
    nodes: int = 0
    leaves: int = 0
    emitted: int = 0

    def to_dict(self) -> dict:
        return {"graphs": self.graphs, "nodes": self.nodes, "leaves": self.leaves,
                "emitted": self.emitted}


# -- Ramsey graphs ------------------------------------------------------------------


def enumerate_ramsey_graphs(n: int, s: int, t: int) -> list[CanonicalForm]:
    """All graphs on n vertices without K_s and without an independent t-set.

    Both properties are hereditary, so every such graph arises from one on
    n - 1 vertices by adding a vertex; only extensions creating no new s-clique
    and no new independent t-set through the added vertex are kept.
    """
    if s < 2 or t < 2:
        raise ValueError("Ramsey parameters must be at least 2")
    if not 1 <= n <= 9 or ((s, t) == (5, 3) and n > 8):
        raise ValueError(f"exact Ramsey enumeration is limited to n <= 9 (n <= 8 for (5,3)); got n={n}")
    level = {graph_canonical_form(SimpleGraph.empty(1))}
    for k in range(1, n):
        full = (1 << k) - 1
        nxt: set[CanonicalForm] = set()
        for cf in level:
            adj = cf.to_graph().adj
            coadj = tuple(full & ~a & ~(1 << i) for i, a in enumerate(adj))
            for nb in range(1 << k):
                if _find_clique(adj, s - 1, nb) is not None:
                    continue
                if _find_clique(coadj, t - 1, full & ~nb) is not None:
                    continue
                new = [a | (1 << k) if nb >> i & 1 else a for i, a in enumerate(adj)]
                new.append(nb)
                nxt.add(graph_canonical_form(SimpleGraph(k + 1, tuple(new))))
        level = nxt
    return sorted(level)


# -- pruners -----------------------------------------------------------------------------


@dataclass(frozen=True)
class Pruner:
    """Necessary conditions imposed during the search.

    ``clique_bound`` excludes K_s from the edge graph, ``no_independent_triple``
    excludes independent 3-sets, ``ridge_cap`` bounds the facets through an
    edge, and ``equality_two`` adds the clausal form of the second-power
    criterion (the split of [5] when n = 5).
    """

    name: str
    clique_bound: Callable[[int], int | None]
    no_independent_triple: bool
    ridge_cap: int | None
    equality_two: bool
    split_five: bool


PRUNERS = {
    "thm_2_2": Pruner("thm_2_2", lambda n: None, True, None, True, True),
    "eq2": Pruner("eq2", lambda n: 5, True, 2, True, True),
    "eq3": Pruner("eq3", lambda n: 4 if n >= 6 else 5, True, 2, False, True),
}
PRUNER_NAMES = ("none",) + tuple(PRUNERS)


def _candidate_graphs(n: int, p: Pruner) -> list[CanonicalForm]:
    bound = p.clique_bound(n)
    s = bound if bound is not None else n + 1
    t = 3 if p.no_independent_triple else n + 1
    return enumerate_ramsey_graphs(n, s, t)


def _bits(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


class _TriangleSearch:
    """Backtracking over the triangles of one graph (0-based vertex masks)."""

    def __init__(self, n: int, adj: tuple[int, ...], p: Pruner, stats: SearchStats):
        self.n, self.adj, self.p, self.stats = n, adj, p, stats
        self.ok = True
        edge_list = [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1]
        tris = [(a, b, c) for a, b in edge_list for c in range(b + 1, n)
                if adj[a] >> c & 1 and adj[b] >> c & 1]
        self.tris = [_bits(t) for t in tris]
        self.var = {m: i for i, m in enumerate(self.tris)}
        T = len(self.tris)
        eid = {_bits(e): i for i, e in enumerate(edge_list)}
        self.tri_edges = [[eid[_bits(e)] for e in combinations(t, 2)] for t in tris]
        self.edge_last_at: list[list[int]] = [[] for _ in range(T)]
        for e, em in enumerate(_bits(x) for x in edge_list):
            holders = [i for i, m in enumerate(self.tris) if m & em == em]
            if not holders:
                self.ok = False  # an edge in no triangle can never be covered
                return
            self.edge_last_at[holders[-1]].append(e)
        if any(a == 0 for a in adj):
            self.ok = False
            return
        self.pos_at: list[list[int]] = [[] for _ in range(T)]
        self.neg_at: list[list[int]] = [[] for _ in range(T)]
        if p.equality_two and n >= 6:
            self._equality_two_clauses()
        if p.split_five and n == 5:
            self._split_clause(tuple(range(5)))

    def _edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def _add(self, vars_: list[int], positive: bool) -> None:
        if not vars_:
            self.ok = False
            return
        mask = 0
        for i in vars_:
            mask |= 1 << i
        (self.pos_at if positive else self.neg_at)[max(vars_)].append(mask)

    def _tri_vars(self, triples) -> list[int]:
        return [self.var[m] for m in (_bits(t) for t in triples) if m in self.var]

    def _split_clause(self, s: tuple[int, ...]) -> None:
        # some non-edge p of s must leave a nonface s - p
        vars_ = []
        for p in combinations(s, 2):
            if self._edge(*p):
                continue
            rest = _bits(v for v in s if v not in p)
            if rest not in self.var:
                return  # already split
            vars_.append(self.var[rest])
        self._add(vars_, positive=False)

    def _equality_two_clauses(self) -> None:
        n = self.n
        for u in range(n):
            others = [v for v in range(n) if v != u]
            for a, b, c in combinations(others, 3):
                if self._edge(u, a) and self._edge(u, b) and self._edge(u, c):
                    self._add(self._tri_vars([(u, a, b), (u, a, c), (u, b, c)]), positive=True)
                    if not self.ok:
                        return
        for s in combinations(range(n), 4):
            a, b, c, d = s
            splits = (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c)))
            if any(not self._edge(*x) and not self._edge(*y) for x, y in splits):
                continue
            self._add(self._tri_vars(combinations(s, 3)), positive=True)
            if not self.ok:
                return
        for s in combinations(range(n), 5):
            self._split_clause(s)
            if not self.ok:
                return

    def leaves(self) -> Iterator[int]:
        """Chosen-triangle bitmasks (over variable indices) of every consistent assignment."""
        if not self.ok:
            return
        T = len(self.tris)
        cap = self.p.ridge_cap
        count = [0] * (max((e for es in self.tri_edges for e in es), default=-1) + 1)
        stats = self.stats

        def rec(i: int, chosen: int) -> Iterator[int]:
            stats.nodes += 1
            if i == T:
                yield chosen
                return
            es = self.tri_edges[i]
            for take in (1, 0):
                if take:
                    if cap is not None and any(count[e] >= cap for e in es):
                        continue
                    for e in es:
                        count[e] += 1
                    nxt = chosen | (1 << i)
                else:
                    nxt = chosen
                good = all(count[e] for e in self.edge_last_at[i])
                if good:
                    good = all(nxt & c for c in self.pos_at[i]) and all(nxt & c != c for c in self.neg_at[i])
                if good:
                    yield from rec(i + 1, nxt)
                if take:
                    for e in es:
                        count[e] -= 1

        yield from rec(0, 0)

    def complex_of(self, chosen: int) -> SimplicialComplex:
        return SimplicialComplex(self.n, antichain(m for i, m in enumerate(self.tris) if chosen >> i & 1))


@lru_cache(maxsize=4)
def _unpruned_masks(n: int) -> tuple[int, ...]:
    """Orbit representatives (least image under S_n) of covering triple sets."""
    triples = list(combinations(range(n), 3))
    T = len(triples)
    idx = {t: i for i, t in enumerate(triples)}
    masks = np.arange(1 << T, dtype=np.int64)
    cover = np.zeros_like(masks)
    for i, t in enumerate(triples):
        cover |= ((masks >> i) & 1) * _bits(t)
    masks = masks[cover == (1 << n) - 1]
    lo_bits = min(T, 10)
    lo_mask = (1 << lo_bits) - 1
    lo_range = np.arange(1 << lo_bits, dtype=np.int64)
    hi_range = np.arange(1 << (T - lo_bits), dtype=np.int64)
    lo_part, hi_part = masks & lo_mask, masks >> lo_bits
    best = masks.copy()
    for perm in permutations(range(n)):
        image = [idx[tuple(sorted(perm[v] for v in t))] for t in triples]
        tab_lo = np.zeros(1 << lo_bits, dtype=np.int64)
        for b in range(lo_bits):
            tab_lo |= ((lo_range >> b) & 1) << image[b]
        tab_hi = np.zeros(1 << (T - lo_bits), dtype=np.int64)
        for b in range(T - lo_bits):
            tab_hi |= ((hi_range >> b) & 1) << image[lo_bits + b]
        np.minimum(best, tab_lo[lo_part] | tab_hi[hi_part], out=best)
    reps = masks[best == masks]
    return tuple(int(x) for x in reps)


def _unpruned(n: int, stats: SearchStats) -> Iterator[SimplicialComplex]:
    triples = [_bits(t) for t in combinations(range(n), 3)]
    for rep in _unpruned_masks(n):
        stats.leaves += 1
        stats.emitted += 1
        yield SimplicialComplex(n, antichain(m for i, m in enumerate(triples) if rep >> i & 1))


def enumerate_pure_2complexes(n: int, pruner: str = "none",
                              stats: SearchStats | None = None) -> Iterator[SimplicialComplex]:
    """Stream pure two-dimensional complexes on exactly n vertices, one per isomorphism class.

    With a pruner other than ``"none"`` only complexes satisfying the
    pruner's necessary conditions are produced.
    """
    if not MIN_N <= n <= MAX_N:
        raise ValueError(f"n must lie in {MIN_N}..{MAX_N}, got {n}")
    if pruner not in PRUNER_NAMES:
        raise ValueError(f"unknown pruner {pruner!r}; choose from {', '.join(PRUNER_NAMES)}")
    stats = stats if stats is not None else SearchStats()
    if pruner == "none":
        if n > UNPRUNED_MAX_N:
            raise ValueError(f"the unpruned enumeration is limited to n <= {UNPRUNED_MAX_N}")
        yield from _unpruned(n, stats)
        return
    p = PRUNERS[pruner]
    for gcf in _candidate_graphs(n, p):
        g = gcf.to_graph()
        stats.graphs += 1
        search = _TriangleSearch(n, g.adj, p, stats)
        seen: set[CanonicalForm] = set()
        for chosen in search.leaves():
            stats.leaves += 1
            cx = search.complex_of(chosen)
            cf = canonical_form(cx)
            if cf in seen:
                continue
            seen.add(cf)
            stats.emitted += 1
            yield cx


# -- classification checks ---------------------------------------------------------------


@dataclass
class ClassificationResult:
    n: int
    survivors: list[CanonicalForm]
    expected: list[CanonicalForm] | None
    matched: bool
    elapsed: float
    pruner: str
    counters: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "survivors": [cf.to_complex().to_dict()["facets"] for cf in self.survivors],
            "expected": None if self.expected is None
            else [cf.to_complex().to_dict()["facets"] for cf in self.expected],
            "matched": self.matched,
            "elapsed": round(self.elapsed, 3),
            "pruner": self.pruner,
            "counters": self.counters,
            "details": self.details,
        }


@dataclass
class ClassificationReport:
    theorem: str
    results: list[ClassificationResult]

    @property
    def matched(self) -> bool:
        return all(r.matched for r in self.results)

    def counts(self) -> dict[int, int]:
        return {r.n: len(r.survivors) for r in self.results}

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "matched": self.matched,
                "results": [r.to_dict() for r in self.results]}


def _second_power_cm(cx: SimplicialComplex) -> bool:
    from .criteria import symbolic_cm2

    return powers_equal(cx, 2).equal and symbolic_cm2(cx).holds


def _high_power_cm(cx: SimplicialComplex) -> bool:
    return _second_power_cm(cx) and powers_equal(cx, 3).equal


def _equal_at_3(cx: SimplicialComplex) -> bool:
    return powers_equal(cx, 3).equal


def _criterion_25(cx: SimplicialComplex) -> bool:
    from .criteria import thm_2_5

    return thm_2_5(cx).holds


def _criterion_23(cx: SimplicialComplex) -> bool:
    from .criteria import thm_2_3

    return thm_2_3(cx).holds


@dataclass(frozen=True)
class _Plan:
    ns: tuple[int, ...]
    keep: Callable[[SimplicialComplex], bool]
    pruned: str
    # at these n the expected set is the criterion's verdict over the same
    # enumeration; elsewhere it is the fixture list
    criterion: Callable[[SimplicialComplex], bool] | None = None
    criterion_ns: tuple[int, ...] = ()


PLANS = {
    "3.8": _Plan((5, 6, 7, 8), _second_power_cm, "eq2"),
    "3.9": _Plan((5, 6, 7, 8), _high_power_cm, "eq2"),
    "2.5": _Plan((6, 7, 8), _equal_at_3, "eq3", _criterion_25, (6,)),
    "2.3": _Plan((6,), _equal_at_3, "eq3", _criterion_23, (6,)),
}


def _expected_from_fixtures(theorem: str, n: int) -> list[CanonicalForm] | None:
    from .fixtures import expected_complexes

    cxs = expected_complexes(theorem, n)
    return None if cxs is None else sorted({canonical_form(c) for c in cxs})


def verify_classification(theorem_id: str, ns: tuple[int, ...] | list[int] | None = None,
                          pruner: str | None = None) -> ClassificationReport:
    """Re-derive a classification by exhaustive search and compare with the expected list.

    For n <= 6 the unpruned enumeration is used unless ``pruner`` is given;
    above that the plan's pruner.  Survivors and expectations are compared
    as sets of canonical forms.
    """
    if theorem_id not in PLANS:
        raise ValueError(f"unknown classification {theorem_id!r}; choose from {', '.join(sorted(PLANS))}")
    plan = PLANS[theorem_id]
    ns = plan.ns if ns is None else tuple(ns)
    bad = [n for n in ns if n not in plan.ns]
    if bad:
        raise ValueError(f"{theorem_id} is checked for n in {plan.ns}, not {bad}")
    results = []
    for n in ns:
        start = time.perf_counter()
        use = pruner or ("none" if n <= UNPRUNED_MAX_N else plan.pruned)
        stats = SearchStats()
        survivors: set[CanonicalForm] = set()
        by_criterion: set[CanonicalForm] = set()
        equal_at_4: set[CanonicalForm] = set()
        use_criterion = n in plan.criterion_ns
        for cx in enumerate_pure_2complexes(n, use, stats):
            cf = canonical_form(cx)
            if plan.keep(cx):
                survivors.add(cf)
                if theorem_id == "2.3" and powers_equal(cx, 4).equal:
                    equal_at_4.add(cf)
            if use_criterion and plan.criterion(cx):
                by_criterion.add(cf)
        if use_criterion:
            expected = sorted(by_criterion)
        else:
            expected = _expected_from_fixtures(theorem_id, n)
        ordered = sorted(survivors)
        matched = expected is not None and ordered == expected
        details: dict = {}
        if theorem_id == "2.3":
            details["equal_at_4_same_set"] = equal_at_4 == survivors
            matched = matched and equal_at_4 == survivors
        if theorem_id in ("3.8", "3.9"):
            details["complete_intersection"] = [
                is_complete_intersection(stanley_reisner_ideal(cf.to_complex())) for cf in ordered]
        results.append(ClassificationResult(
            n=n, survivors=ordered, expected=expected, matched=matched,
            elapsed=time.perf_counter() - start, pruner=use,
            counters=stats.to_dict(), details=details))
    return ClassificationReport(theorem_id, results)


__all__ = [
    "enumerate_ramsey_graphs", "enumerate_pure_2complexes", "verify_classification",
    "ClassificationResult", "ClassificationReport", "SearchStats", "Pruner", "PRUNERS",
    "PRUNER_NAMES", "canonical_form", "CanonicalForm",
]
