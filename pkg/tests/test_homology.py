import networkx as nx
import pytest
from hypothesis import given, settings

from srpowers.complex import SimplicialComplex, from_facets, simplex, to_mask
from srpowers.homology import (
    cm_obstruction, is_cohen_macaulay, matrix_rank, normalize_field, reduced_betti,
    reduced_euler_characteristic, union_cm_check,
)
from srpowers.verdict import ConsistencyError

from conftest import complexes, pure_2complexes

# six-vertex real projective plane
RP2 = from_facets(6, [[1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5],
                      [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]])


def test_spheres_and_disks(named):
    assert reduced_betti(named("octahedron")).ranks == (0, 0, 1)
    assert reduced_betti(named("heptagon")).ranks == (0, 1, 0)
    assert reduced_betti(simplex(3)).ranks == (0, 0, 0)
    assert reduced_betti(from_facets(4, [[1, 2], [3, 4]])).ranks == (1, 0)


def test_projective_plane_depends_on_field():
    assert reduced_betti(RP2).ranks == (0, 0, 0)
    assert reduced_betti(RP2, 2).ranks == (0, 1, 1)
    assert reduced_betti(RP2, 3).ranks == (0, 0, 0)
    assert is_cohen_macaulay(RP2)
    assert not is_cohen_macaulay(RP2, 2)
    assert cm_obstruction(RP2, 2) == ()


def test_rank_over_fields():
    rows = [[2, 0], [0, 2]]
    assert matrix_rank(rows) == 2
    assert matrix_rank(rows, 2) == 0
    assert matrix_rank(rows, 3) == 2
    with pytest.raises(ValueError):
        normalize_field(4)


@settings(max_examples=80, deadline=None)
@given(complexes(max_n=6))
def test_euler_characteristic_identity(cx):
    assert reduced_betti(cx).euler() == reduced_euler_characteristic(cx)
    assert reduced_betti(cx, 2).euler() == reduced_euler_characteristic(cx)


@settings(max_examples=80, deadline=None)
@given(complexes(max_n=6))
def test_h0_counts_components(cx):
    g = nx.Graph()
    g.add_nodes_from(range(1, cx.n + 1))
    g.add_edges_from(cx.edge_graph().edges())
    assert reduced_betti(cx, upto=0).ranks[0] == nx.number_connected_components(g) - 1


@settings(max_examples=60, deadline=None)
@given(pure_2complexes(max_n=6))
def test_cm_obstruction_is_a_bad_link(cx):
    bad = cm_obstruction(cx)
    if bad is None:
        assert is_cohen_macaulay(cx)
        return
    lk = cx.link(bad) if bad else cx
    d = lk.dim
    assert d >= 1
    assert any(reduced_betti(lk, upto=d - 1).ranks)


def test_cm_examples(named):
    for name in ("octahedron", "fixture_a", "fixture_b", "pentagon_cone", "six_vertex_sphere"):
        assert is_cohen_macaulay(named(name)), name
    # two triangles meeting in a vertex
    assert not is_cohen_macaulay(from_facets(5, [[1, 2, 3], [3, 4, 5]]))
    assert not is_cohen_macaulay(named("heptagon"))
    assert is_cohen_macaulay(from_facets(5, [[1, 2], [2, 3], [3, 4], [4, 5]]))


def partial(n, facets):
    return SimplicialComplex.from_masks(n, [to_mask(f) for f in facets])


def test_union_gluing():
    a = partial(4, [[1, 2, 3]])
    b = partial(4, [[2, 3, 4]])
    assert union_cm_check(a, b).holds
    c = partial(5, [[1, 2, 3]])
    d = partial(5, [[3, 4, 5]])
    rep = union_cm_check(c, d)
    assert rep.fails and rep.theorem == "3.3"
    e = partial(4, [[1, 2]])
    f = partial(4, [[3, 4]])
    assert union_cm_check(e, f).fails
    with pytest.raises(ValueError):
        union_cm_check(a, e)
