"""
Symbolic powers through m-covers
================================

Monomials of the symbolic power I^(m) are exactly the m-covers of the
complement complex.  Equality with I^m holds when every minimal m-cover
splits into m one-covers.
"""

import numpy as np

from srpowers import load_fixture
from srpowers.covers import decompose_m_cover, is_m_cover, minimal_m_covers
from srpowers.ideal import powers_equal

hept = load_fixture("heptagon")

# minimal covers as an array, one row per cover
for m in (2, 3, 4):
    covers = np.array(minimal_m_covers(hept, m))
    print(f"m={m}: {len(covers)} minimal covers, degrees {np.unique(covers.sum(axis=1)).tolist()}")

# the all-ones vector is a 4-cover that does not split
ones = (1,) * 7
print(is_m_cover(hept, ones, 4), decompose_m_cover(hept, ones, 4))

# powers_equal reports the least non-splitting cover
for m in range(2, 6):
    v = powers_equal(hept, m)
    print(m, v.equal, v.witness)
