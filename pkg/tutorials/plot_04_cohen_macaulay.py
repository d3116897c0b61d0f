"""
Reisner's criterion and Cohen-Macaulay powers
=============================================

"""

from srpowers import load_fixture
from srpowers.complex import from_facets
from srpowers.criteria import cm_power_verdict, dim1_cm_power, is_matroid, symbolic_cm2
from srpowers.homology import is_cohen_macaulay, reduced_betti

# homology of the six-vertex projective plane depends on the field
rp2 = from_facets(6, [[1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5],
                      [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6]])
for field in (None, 2, 3):
    print(field or "Q", reduced_betti(rp2, field).ranks, is_cohen_macaulay(rp2, field))

# second symbolic power, clause by clause
rep = symbolic_cm2(load_fixture("heptagon"))
print(rep.conditions, rep.witness)

# ordinary powers
for name in ("pentagon_cone", "octahedron", "fixture_b"):
    cx = load_fixture(name)
    print(name, [cm_power_verdict(cx, m).holds for m in (1, 2, 3)], "matroid", is_matroid(cx).holds)

# graphs: the pentagon square is CM, its cube is not
c5 = from_facets(5, [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]])
print([dim1_cm_power(c5, m).holds for m in (2, 3)])
