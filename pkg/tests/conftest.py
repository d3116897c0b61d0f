from itertools import combinations

import pytest
from hypothesis import strategies as st

from srpowers.complex import SimplicialComplex, antichain, to_mask
from srpowers.fixtures import load_fixture

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def named():
    """Lazy access to the shipped complexes by name."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = load_fixture(name)
        return cache[name]

    return get


def _cover_all(n, masks):
    masks = list(masks)
    covered = 0
    for m in masks:
        covered |= m
    for v in range(n):
        if not covered >> v & 1:
            masks.append(1 << v)
    return SimplicialComplex(n, antichain(masks))


@st.composite
def pure_2complexes(draw, min_n=4, max_n=7):
    n = draw(st.integers(min_n, max_n))
    triples = [to_mask(t) for t in combinations(range(1, n + 1), 3)]
    chosen = draw(st.sets(st.sampled_from(triples), min_size=1, max_size=len(triples)))
    chosen = set(chosen)
    for v in range(n):
        if not any(m >> v & 1 for m in chosen):
            others = [m for m in triples if m >> v & 1]
            chosen.add(draw(st.sampled_from(others)))
    return SimplicialComplex(n, antichain(chosen))


@st.composite
def complexes(draw, min_n=2, max_n=6):
    """Arbitrary (not necessarily pure) complexes using every vertex."""
    n = draw(st.integers(min_n, max_n))
    full = (1 << n) - 1
    masks = draw(st.lists(st.integers(1, full), min_size=1, max_size=6))
    return _cover_all(n, masks)


@pytest.fixture(scope="session")
def all_pure():
    """Every pure 2-complex on 5 and 6 vertices up to isomorphism (unpruned search)."""
    from srpowers.classify import enumerate_pure_2complexes

    return {n: list(enumerate_pure_2complexes(n)) for n in (5, 6)}


@pytest.fixture(scope="session")
def equal_table(all_pure):
    """Brute-force equality of ordinary and symbolic powers, keyed by (n, m)."""
    from srpowers.ideal import powers_equal

    table = {}

    def get(n, m):
        if (n, m) not in table:
            table[n, m] = [powers_equal(c, m).equal for c in all_pure[n]]
        return table[n, m]

    return get


@pytest.fixture(scope="session")
def cm2_six(all_pure):
    """(complex, clause-form verdict) for every CM complex on 6 vertices.

    symbolic_cm2 cross-checks against the subcomplex form and raises on
    any disagreement, so building this table is itself the comparison.
    """
    from srpowers.criteria import symbolic_cm2
    from srpowers.homology import is_cohen_macaulay

    return [(cx, symbolic_cm2(cx).holds) for cx in all_pure[6] if is_cohen_macaulay(cx)]
