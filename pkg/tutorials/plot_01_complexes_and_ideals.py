"""
Complexes, nonfaces and Stanley-Reisner ideals
==============================================

"""

# a complex is given by its facets on vertices 1..n
from srpowers import load_fixture
from srpowers.complex import from_facets

cx = from_facets(5, [[1, 2, 3], [1, 2, 4], [3, 4, 5]])
print(cx)
print("dimension", cx.dim, "pure", cx.is_pure())

# minimal nonfaces generate the ideal
from srpowers.ideal import stanley_reisner_ideal

print(stanley_reisner_ideal(cx).to_strings())

# the complement complex: facets are complements of facets
print(cx.delta_c())

# shipped fixtures load by name
octa = load_fixture("octahedron")
print(octa, stanley_reisner_ideal(octa).to_strings())

# links and stars
print("link of 1:", octa.link([1]))
print("star of 1:", octa.star([1]))
