"""Combinatorial criteria for equality and Cohen-Macaulayness of powers.

Each checker returns a :class:`VerdictReport` whose ``conditions`` name every
clause of the criterion and whose ``witness`` pins down a failure.  The
checkers are purely combinatorial; the tests compare them against the
algebraic oracles in :mod:`srpowers.ideal` and :mod:`srpowers.homology`.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable

from .complex import ComplexError, SimplicialComplex, from_mask, to_mask
from .graphs import (
    SimpleGraph, complement, find_clique, find_disjoint_edges, find_disjoint_triangles,
    find_independent_set, find_induced_cycle, is_ramsey, two_colouring,
)
from .homology import Field, cm_obstruction, depth_at_least_2, normalize_field
from .ideal import powers_equal
from .verdict import ConsistencyError, Verdict, VerdictReport

HOLDS, FAILS, NA = Verdict.HOLDS, Verdict.FAILS, Verdict.NOT_APPLICABLE


def _bits(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _one(vs: Iterable[int]) -> list[int]:
    """0-based vertex tuple -> sorted 1-based list (for reports)."""
    return sorted(v + 1 for v in vs)


def _require_dim2(cx: SimplicialComplex, who: str, n: int | None = None, nmin: int | None = None) -> None:
    if cx.is_void() or not cx.is_pure() or cx.dim != 2:
        raise ComplexError(f"{who} needs a pure two-dimensional complex")
    if n is not None and cx.n != n:
        raise ComplexError(f"{who} needs exactly {n} vertices, got {cx.n}")
    if nmin is not None and cx.n < nmin:
        raise ComplexError(f"{who} needs at least {nmin} vertices, got {cx.n}")


def _face_test(cx: SimplicialComplex) -> Callable[..., bool]:
    faces = set(cx.faces())

    def is_face(*vs: int) -> bool:
        return _bits(vs) in faces

    return is_face


def _report(theorem: str, conditions: dict, witnesses: dict, **extra) -> VerdictReport:
    ok = all(conditions.values())
    return VerdictReport(theorem, Verdict.of(ok), conditions,
                         witness=None if ok else witnesses, **extra)


# -- equality criteria ----------------------------------------------------------------


def thm_2_1(cx: SimplicialComplex) -> VerdictReport:
    """Five vertices: equality iff [5] splits into a 2-nonface and a 3-nonface."""
    _require_dim2(cx, "thm_2_1", n=5)
    is_face = _face_test(cx)
    for p in combinations(range(5), 2):
        q = tuple(v for v in range(5) if v not in p)
        if not is_face(*p) and not is_face(*q):
            return VerdictReport("2.1", HOLDS, {"split": True},
                                 details={"split": [_one(p), _one(q)]})
    return VerdictReport("2.1", FAILS, {"split": False},
                         witness={"unsplittable": [1, 2, 3, 4, 5]})


def thm_2_2(cx: SimplicialComplex) -> VerdictReport:
    """Equality of the second powers for n >= 6, clause by clause."""
    _require_dim2(cx, "thm_2_2", nmin=6)
    n = cx.n
    is_face = _face_test(cx)
    verts = range(n)
    wit: dict = {}

    for a, b, c in combinations(verts, 3):
        if not (is_face(a, b) or is_face(a, c) or is_face(b, c)):
            wit["i"] = {"independent_set": _one((a, b, c))}
            break

    for u in verts:
        others = [v for v in verts if v != u]
        for a, b, c in combinations(others, 3):
            if is_face(u, a, b) or is_face(u, a, c) or is_face(u, b, c):
                continue
            if is_face(u, a) and is_face(u, b) and is_face(u, c):
                wit["ii"] = {"vertex": u + 1, "triple": _one((a, b, c))}
                break
        if "ii" in wit:
            break

    for s in combinations(verts, 4):
        if any(is_face(*t) for t in combinations(s, 3)):
            continue
        a, b, c, d = s
        splits = (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c)))
        if not any(not is_face(*p) and not is_face(*q) for p, q in splits):
            wit["iii"] = {"four_set": _one(s)}
            break

    for s in combinations(verts, 5):
        if not any(not is_face(*p) and not is_face(*(v for v in s if v not in p))
                   for p in combinations(s, 2)):
            wit["iv"] = {"five_set": _one(s)}
            break

    conditions = {k: k not in wit for k in ("i", "ii", "iii", "iv")}
    return _report("2.2", conditions, wit)


def thm_2_3(cx: SimplicialComplex) -> VerdictReport:
    """Six vertices, m >= 3: three disjoint non-edges and two disjoint triangles."""
    _require_dim2(cx, "thm_2_3", n=6)
    g = cx.edge_graph()
    matching = find_disjoint_edges(complement(g), 3)
    tris = find_disjoint_triangles(g, 2)
    conditions = {"three_disjoint_nonedges": matching is not None,
                  "two_disjoint_triangles": tris is not None}
    wit = {k: "none found" for k, ok in conditions.items() if not ok}
    return _report("2.3", conditions, wit,
                   details={"nonedge_matching": matching, "triangles": tris})


def _is_heptagon_ideal(cx: SimplicialComplex) -> tuple[bool, str | None]:
    from .canonical import graph_canonical_form

    mins = cx.minimal_nonface_masks()
    if any(h.bit_count() != 2 for h in mins):
        return False, "some minimal nonface has more than two vertices"
    g = SimpleGraph.from_edges(cx.n, [from_mask(h) for h in mins])
    if graph_canonical_form(g) != graph_canonical_form(SimpleGraph.cycle(7)):
        return False, "the non-edge graph is not a 7-cycle"
    return True, None


def thm_2_5(cx: SimplicialComplex) -> VerdictReport:
    """m = 3 and n >= 6: the n = 6 criterion, or the 7-cycle edge ideal."""
    _require_dim2(cx, "thm_2_5", nmin=6)
    if cx.n == 6:
        sub = thm_2_3(cx)
        return VerdictReport("2.5", sub.verdict, {"i": sub.holds, "ii": False},
                             witness=None if sub.holds else {"i": sub.witness},
                             details={"i": sub.to_dict()})
    if cx.n == 7:
        ok, why = _is_heptagon_ideal(cx)
        return VerdictReport("2.5", Verdict.of(ok), {"i": False, "ii": ok},
                             witness=None if ok else {"ii": why})
    return VerdictReport("2.5", FAILS, {"i": False, "ii": False},
                         witness={"n": cx.n, "reason": "only n = 6 or n = 7 are possible"})


def thm_2_6(cx: SimplicialComplex, m: int) -> VerdictReport:
    """m >= 4: only six vertices with the three-matching / two-triangle shape."""
    if m < 4:
        raise ValueError("thm_2_6 is the criterion for m >= 4")
    _require_dim2(cx, "thm_2_6", nmin=6)
    if cx.n != 6:
        return VerdictReport("2.6", FAILS, {"n_is_6": False, "shape": False},
                             witness={"n": cx.n})
    sub = thm_2_3(cx)
    return VerdictReport("2.6", sub.verdict, {"n_is_6": True, "shape": sub.holds},
                         witness=None if sub.holds else {"shape": sub.witness})


def _odd_cycle(g: SimpleGraph) -> tuple[int, ...] | None:
    for ln in range(3, g.n + 1, 2):
        cyc = find_induced_cycle(g, ln)
        if cyc is not None:
            return cyc
    return None


def prop_1_3(cx: SimplicialComplex) -> VerdictReport:
    """Codimension two: equality (for some or all m >= 2) iff the complement graph is bipartite."""
    if cx.is_void() or not cx.is_pure() or cx.dim != cx.n - 3:
        raise ComplexError("prop_1_3 needs a pure complex of dimension n - 3")
    gc = SimpleGraph.from_edges(cx.n, [from_mask(f) for f in cx.delta_c().facets])
    colours = two_colouring(gc)
    if colours is not None:
        return VerdictReport("1.3", HOLDS, {"bipartite": True}, details={"colouring": colours})
    return VerdictReport("1.3", FAILS, {"bipartite": False}, witness={"odd_cycle": _odd_cycle(gc)})


def equality_verdict(cx: SimplicialComplex, m: int) -> VerdictReport:
    """Theorem-based answer to ``I^(m) == I^m``; not-applicable outside the theorems."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if cx.is_void() or not cx.is_pure():
        return VerdictReport("none", NA, route="not pure")
    mins = cx.minimal_nonface_masks()
    if len(mins) <= 1:
        return VerdictReport("none", HOLDS, {"principal_or_zero": True},
                             route="zero ideal" if not mins else "principal ideal")
    if m == 1:
        return VerdictReport("none", HOLDS, {"m_is_1": True}, route="m = 1")
    d = cx.dim
    if d == 2 and cx.n == 5:
        rep = thm_2_1(cx)
        alt = prop_1_3(cx)
        if rep.verdict is not alt.verdict:
            raise ConsistencyError(f"split test and bipartite test disagree on {cx}")
        rep.conditions["complement_bipartite"] = alt.holds
        rep.route = "2.1"
        return rep
    if d == 2 and cx.n >= 6:
        rep = thm_2_2(cx) if m == 2 else thm_2_5(cx) if m == 3 else thm_2_6(cx, m)
        rep.route = rep.theorem
        return rep
    if d == cx.n - 3:
        rep = prop_1_3(cx)
        rep.route = "1.3"
        return rep
    return VerdictReport("none", NA, route="no criterion covers this case")


# -- necessary conditions ---------------------------------------------------------


def find_ktr(cx: SimplicialComplex, t: int, r: int) -> tuple[int, ...] | None:
    """An r-set of vertices all of whose t-subsets are faces, or None."""
    if not 1 <= t <= r <= cx.n:
        raise ValueError(f"need 1 <= t <= r <= n, got t={t}, r={r}, n={cx.n}")
    if t == 2:
        return find_clique(cx.edge_graph(), r)
    if t == 1:
        return tuple(range(1, r + 1))  # every vertex is a face
    faces = set(cx.faces_of_size(t))
    for s in combinations(range(cx.n), r):
        if all(_bits(sub) in faces for sub in combinations(s, t)):
            return tuple(v + 1 for v in s)
    return None


def contains_ktr(cx: SimplicialComplex, t: int, r: int) -> bool:
    return find_ktr(cx, t, r) is not None


def structural_lemmas(cx: SimplicialComplex, m: int) -> VerdictReport:
    """Evaluate the necessary conditions for equality at m.

    Each entry of ``conditions`` is True/False when the condition applies to
    (cx, m) and None otherwise.  The report holds when every applicable
    conclusion holds; it is meant to be read as an implication from
    equality, not as a criterion.
    """
    if m < 2:
        raise ValueError("the necessary conditions concern m >= 2")
    if cx.is_void() or not cx.is_pure():
        return VerdictReport("1.4-1.8", NA, route="not pure")
    n, dim = cx.n, cx.dim
    d = dim + 1
    g = cx.edge_graph()
    cond: dict = {}
    wit: dict = {}

    indep = find_independent_set(g, 3) if n >= 3 else None
    cond["no_independent_3_set"] = indep is None
    if indep:
        wit["no_independent_3_set"] = indep

    ridge_count: dict[int, int] = {}
    for f in cx.facets:
        for v in from_mask(f):
            r = f & ~(1 << (v - 1))
            ridge_count[r] = ridge_count.get(r, 0) + 1
    crowded = [r for r, c in sorted(ridge_count.items()) if c > 2]
    cond["ridges_in_at_most_2_facets"] = not crowded
    if crowded:
        wit["ridges_in_at_most_2_facets"] = from_mask(crowded[0])

    cond["no_large_complete_skeleton"] = None
    if m == 2 and d + 2 <= n:
        hit = find_ktr(cx, (d + 2) // 2, d + 2)
        cond["no_large_complete_skeleton"] = hit is None
        if hit:
            wit["no_large_complete_skeleton"] = hit

    cond["no_codim2_complete_skeleton"] = None
    if m >= 3 and n >= d + 3 and d >= 2:
        hit = find_ktr(cx, d - 1, d + 1)
        cond["no_codim2_complete_skeleton"] = hit is None
        if hit:
            wit["no_codim2_complete_skeleton"] = hit

    cond["ramsey_5_3"] = None
    cond["ramsey_4_3"] = None
    if dim == 2 and m == 2:
        cond["ramsey_5_3"] = is_ramsey(g, 5, 3)
        if not cond["ramsey_5_3"]:
            wit["ramsey_5_3"] = find_clique(g, 5) or indep
    if dim == 2 and m >= 3 and n >= 6:
        cond["ramsey_4_3"] = is_ramsey(g, 4, 3)
        if not cond["ramsey_4_3"]:
            wit["ramsey_4_3"] = find_clique(g, 4) or indep

    cond["n_at_most_2d"] = None
    if m >= d + 1:
        cond["n_at_most_2d"] = n <= 2 * d
        if n > 2 * d:
            wit["n_at_most_2d"] = {"n": n, "d": d}

    ok = all(v is not False for v in cond.values())
    return VerdictReport("1.4-1.8", Verdict.of(ok), cond, witness=None if ok else wit)


# -- Cohen-Macaulayness ---------------------------------------------------------------


def _star_intersection(cx: SimplicialComplex, u: int, v: int) -> SimplicialComplex:
    return cx.star([u]).intersection(cx.star([v]))


def symbolic_cm2_by_subcomplexes(cx: SimplicialComplex, field: Field | None = None) -> VerdictReport:
    """CM of the second symbolic power via CM of the complex and of every Delta_V.

    Only |V| = 2, 3 matter in dimension <= 2; a void Delta_V imposes nothing.
    """
    field = normalize_field(field)
    if cx.is_void() or cx.dim not in (1, 2):
        raise ComplexError("the subcomplex form is implemented for dimension 1 and 2")
    top = cx.dim + 1
    bad = cm_obstruction(cx, field)
    cond = {"complex_cm": bad is None, "subcomplexes_cm": True}
    wit: dict = {}
    if bad is not None:
        wit["complex_cm"] = {"face": list(bad)}
    for k in range(2, top + 1):
        for V in combinations(range(1, cx.n + 1), k):
            sub = cx.delta_V(V)
            if sub.is_void():
                continue
            if cm_obstruction(sub, field) is not None:
                cond["subcomplexes_cm"] = False
                wit["subcomplexes_cm"] = {"V": list(V), "facets": sub.facet_sets}
                break
        if not cond["subcomplexes_cm"]:
            break
    return _report("3.1", cond, wit)


def symbolic_cm2(cx: SimplicialComplex, field: Field | None = None, cross_check: bool = True) -> VerdictReport:
    """CM of the second symbolic power of a two-dimensional complex, clause by clause.

    With ``cross_check`` the subcomplex form is evaluated as well and a
    disagreement raises :class:`ConsistencyError`.
    """
    field = normalize_field(field)
    if cx.is_void() or cx.dim != 2:
        raise ComplexError("symbolic_cm2 needs a two-dimensional complex")
    n = cx.n
    is_face = _face_test(cx)
    verts = range(n)
    wit: dict = {}

    bad = cm_obstruction(cx, field)
    if bad is not None:
        wit["i"] = {"face_with_bad_link": list(bad)}

    for u, v in combinations(verts, 2):
        inter = _star_intersection(cx, u + 1, v + 1)
        if not depth_at_least_2(inter):
            wit["ii"] = {"u": u + 1, "v": v + 1, "intersection": inter.facet_sets}
            break

    for u in verts:
        for v, w in combinations([x for x in verts if x != u], 2):
            if is_face(u, v) and is_face(u, w) and not is_face(v, w):
                if not any(is_face(u, v, t) and is_face(u, w, t) for t in verts):
                    wit["iii"] = {"u": u + 1, "v": v + 1, "w": w + 1}
                    break
        if "iii" in wit:
            break

    for u, v, w in combinations(verts, 3):
        if is_face(u, v) and is_face(u, w) and is_face(v, w) and not is_face(u, v, w):
            if not any(is_face(u, v, t) and is_face(u, w, t) and is_face(v, w, t) for t in verts):
                wit["iv"] = {"triangle": _one((u, v, w))}
                break

    cond = {k: k not in wit for k in ("i", "ii", "iii", "iv")}
    rep = _report("3.4", cond, wit)
    if cross_check:
        other = symbolic_cm2_by_subcomplexes(cx, field)
        if other.verdict is not rep.verdict:
            raise ConsistencyError(f"clause form and subcomplex form disagree on {cx}")
        rep.details["subcomplex_form"] = other.holds
    return rep


def is_matroid(cx: SimplicialComplex) -> VerdictReport:
    """Exchange axiom over face pairs of consecutive sizes (dimension-two clauses cross-checked)."""
    if cx.is_void():
        raise ComplexError("the void complex is not a matroid complex")
    faces = cx.faces()
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    face_set = set(faces)
    witness = None
    for k in range(cx.dim + 1, 0, -1):
        for big in by_size.get(k, []):
            for small in by_size.get(k - 1, []):
                extra = big & ~small
                if not any((small | (1 << (x - 1))) in face_set for x in from_mask(extra)):
                    witness = {"F": list(from_mask(big)), "G": list(from_mask(small))}
                    break
            if witness:
                break
        if witness:
            break
    ok = witness is None
    rep = VerdictReport("3.2", Verdict.of(ok), {"exchange": ok}, witness=witness)
    if cx.dim == 2:
        c = matroid_clauses_dim2(cx)
        if c.verdict is not rep.verdict:
            raise ConsistencyError(f"exchange axiom and two-dimensional clauses disagree on {cx}")
        rep.conditions.update(c.conditions)
        rep.details["clause_witness"] = c.witness
    return rep


def matroid_clauses_dim2(cx: SimplicialComplex) -> VerdictReport:
    """The two exchange clauses that suffice in dimension two."""
    if cx.is_void() or cx.dim != 2:
        raise ComplexError("the clause form needs a two-dimensional complex")
    is_face = _face_test(cx)
    verts = range(cx.n)
    wit: dict = {}
    for u in verts:
        for v, w in combinations([x for x in verts if x != u], 2):
            if is_face(v, w) and not (is_face(u, v) or is_face(u, w)):
                wit["i"] = {"u": u + 1, "edge": _one((v, w))}
                break
        if "i" in wit:
            break
    for f in cx.facets:
        if f.bit_count() != 3:
            continue
        tri = [x - 1 for x in from_mask(f)]
        for u in tri:
            w, t = [x for x in tri if x != u]
            for v in verts:
                if v in tri or not is_face(u, v):
                    continue
                if not (is_face(u, v, w) or is_face(u, v, t)):
                    wit["ii"] = {"edge": _one((u, v)), "facet": _one(tri)}
                    break
            if "ii" in wit:
                break
        if "ii" in wit:
            break
    return _report("3.5", {"i": "i" not in wit, "ii": "ii" not in wit}, wit)


# -- CM of ordinary powers ----------------------------------------------------------------


def _graph_shape(cx: SimplicialComplex) -> tuple[str, int]:
    """('path', edges) / ('cycle', length) / ('other', 0) for a one-dimensional complex."""
    if any(f.bit_count() != 2 for f in cx.facets):
        return "other", 0
    g = cx.edge_graph()
    degs = sorted(g.degree(v) for v in range(1, cx.n + 1))
    conn = depth_at_least_2(cx) if cx.n > 1 else False
    if not conn:
        return "other", 0
    ne = len(cx.facets)
    if degs == [2] * cx.n and ne == cx.n:
        return "cycle", cx.n
    if cx.n >= 2 and degs == [1, 1] + [2] * (cx.n - 2) and ne == cx.n - 1:
        return "path", ne
    return "other", 0


def dim1_cm_power(cx: SimplicialComplex, m: int) -> VerdictReport:
    """CM of I^m for a graph: short paths and short cycles only."""
    if m < 2:
        raise ValueError("dim1_cm_power concerns m >= 2")
    if cx.is_void() or cx.dim != 1:
        raise ComplexError("dim1_cm_power needs a one-dimensional complex")
    mins = cx.minimal_nonface_masks()
    if len(mins) <= 1:
        # zero ideal (an edge) or principal (a triangle, a 2-path): every power is CM
        return VerdictReport("3.7", HOLDS, {"principal_or_zero": True},
                             route="zero ideal" if not mins else "principal ideal")
    shape, size = _graph_shape(cx)
    allowed = {("path", 2), ("cycle", 4)} | ({("cycle", 5)} if m == 2 else set())
    ok = (shape, size) in allowed
    return VerdictReport("3.7", Verdict.of(ok), {"shape": ok},
                         witness=None if ok else {"shape": shape, "size": size},
                         route="m = 2" if m == 2 else "m >= 3",
                         details={"shape": shape, "size": size})


def cm_power_verdict(cx: SimplicialComplex, m: int, field: Field | None = None) -> VerdictReport:
    """CM of the ordinary power I^m in dimension one or two."""
    field = normalize_field(field)
    if m < 1:
        raise ValueError("m must be at least 1")
    if cx.is_void() or cx.dim not in (1, 2):
        raise ValueError("cm_power_verdict supports dimension 1 and 2 only")
    if m == 1:
        bad = cm_obstruction(cx, field)
        return VerdictReport("none", Verdict.of(bad is None), {"complex_cm": bad is None},
                             witness=None if bad is None else {"face_with_bad_link": list(bad)},
                             route="Reisner")
    if cx.dim == 1:
        rep = dim1_cm_power(cx, m)
        rep.route = f"3.7 ({rep.route})"
        return rep
    mins = cx.minimal_nonface_masks()
    if not mins:
        return VerdictReport("none", HOLDS, {"zero_ideal": True}, route="zero ideal")
    bad = cm_obstruction(cx, field)
    if bad is not None:
        return VerdictReport("none", FAILS, {"complex_cm": False},
                             witness={"face_with_bad_link": list(bad)},
                             route="complex not Cohen-Macaulay")
    if len(mins) == 1:
        return VerdictReport("none", HOLDS, {"principal": True}, route="principal ideal")
    if m == 2:
        eq = powers_equal(cx, 2)
        cm2 = symbolic_cm2(cx, field)
        cond = {"powers_equal": eq.equal, "symbolic_cm": cm2.holds}
        wit = {}
        if not eq.equal:
            wit["powers_equal"] = {"cover": list(eq.witness)}
        if not cm2.holds:
            wit["symbolic_cm"] = cm2.witness
        return _report("3.8", cond, wit, route="equality and symbolic CM",
                       details={"symbolic": cm2.to_dict()})
    from .canonical import canonical_form
    from .fixtures import expected_complexes

    listed = expected_complexes("3.9", cx.n) or []
    hit = canonical_form(cx) in {canonical_form(c) for c in listed}
    return VerdictReport("3.9", Verdict.of(hit), {"listed": hit},
                         witness=None if hit else {"not_in_classification": cx.facet_sets},
                         route="classification membership")


__all__ = [
    "thm_2_1", "thm_2_2", "thm_2_3", "thm_2_5", "thm_2_6", "prop_1_3", "equality_verdict",
    "structural_lemmas", "contains_ktr", "find_ktr", "symbolic_cm2",
    "symbolic_cm2_by_subcomplexes", "is_matroid", "matroid_clauses_dim2", "dim1_cm_power",
    "cm_power_verdict",
]
