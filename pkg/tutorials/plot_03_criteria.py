"""
Equality criteria against brute force
=====================================

"""

from srpowers import load_fixture
from srpowers.complex import from_facets
from srpowers.criteria import equality_verdict, thm_2_2
from srpowers.ideal import powers_equal

# each named complex through the criterion route and the cover oracle
for name in ("fixture_a", "fixture_b", "octahedron", "heptagon", "dominating_vertex"):
    cx = load_fixture(name)
    row = []
    for m in (2, 3, 4):
        rep = equality_verdict(cx, m)
        assert rep.holds == powers_equal(cx, m).equal
        row.append(f"m={m}:{'=' if rep.holds else 'x'}({rep.route})")
    print(f"{name:18s}", "  ".join(row))

# a failing clause comes with a witness
# (a book of four triangles on the edge 12)
rep = thm_2_2(from_facets(6, [[1, 2, 3], [1, 2, 4], [1, 2, 5], [1, 2, 6]]))
print(rep.conditions, rep.witness)
