"""
Exhaustive classification up to isomorphism
===========================================

"""

import time

from srpowers.classify import SearchStats, enumerate_pure_2complexes, enumerate_ramsey_graphs, verify_classification

# Ramsey graphs constrain the edge graph
for s in (4, 5):
    print((s, 3), [len(enumerate_ramsey_graphs(n, s, 3)) for n in range(1, 9)])

# every pure 2-complex on 6 vertices up to relabelling
start = time.perf_counter()
print(sum(1 for _ in enumerate_pure_2complexes(6)), "classes", f"{time.perf_counter() - start:.1f}s")

# with the second-power pruner the 8-vertex search is small
stats = SearchStats()
survivors = list(enumerate_pure_2complexes(8, "eq2", stats))
print(len(survivors), stats.to_dict())

# complexes whose second power is CM
rep = verify_classification("3.8")
print(rep.counts(), rep.matched)
for r in rep.results:
    for cf in r.survivors:
        print(r.n, cf.to_complex().facet_sets)
