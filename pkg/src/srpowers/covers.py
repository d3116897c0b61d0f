"""Vertex covers of the facet-complement complex.

A nonnegative integer vector ``a`` is an m-cover when it puts total weight at
least ``m`` outside every facet.  Monomials of the m-th symbolic power are
exactly the m-covers, and the m-th ordinary power consists of sums of m
1-covers, so equality of the two powers is a question about splitting covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .complex import SimplicialComplex, from_mask

ExponentVector = tuple[int, ...]

BOX_LIMIT = 50_000_000


def vector_key(a: Sequence[int]):
    """Graded lexicographic order: total degree first, then the entries."""
    return (sum(a), tuple(a))


def _check_length(cx: SimplicialComplex, a: Sequence[int]) -> None:
    if len(a) != cx.n:
        raise ValueError(f"vector has length {len(a)}, complex has {cx.n} vertices")
    if any(x < 0 for x in a):
        raise ValueError("cover vectors must be nonnegative")


def _complement_incidence(cx: SimplicialComplex) -> np.ndarray:
    """Rows are facets of the complement complex, columns are vertices."""
    full = (1 << cx.n) - 1
    rows = []
    for f in cx.delta_c().facets:
        rows.append([(full & f) >> i & 1 for i in range(cx.n)])
    return np.array(rows, dtype=np.int64).reshape(-1, cx.n)


def is_m_cover(cx: SimplicialComplex, a: Sequence[int], m: int) -> bool:
    _check_length(cx, a)
    if m < 0:
        raise ValueError("m must be nonnegative")
    for g in cx.delta_c().facets:
        if sum(a[v - 1] for v in from_mask(g)) < m:
            return False
    return True


def _box_chunks(k: int, m: int, chunk: int = 1 << 20) -> Iterator[np.ndarray]:
    """All points of {0..m}^k, a block of rows at a time."""
    base = m + 1
    total = base ** k
    if total > BOX_LIMIT:
        raise ValueError(f"cover box of {total} points exceeds the enumeration limit")
    weights = base ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        yield (idx[:, None] // weights[None, :]) % base


def minimal_m_covers(cx: SimplicialComplex, m: int) -> list[ExponentVector]:
    """Coordinatewise-minimal m-covers, sorted in graded lexicographic order.

    Entries above m never help, so the box {0..m}^k over the vertices that
    occur in some complement facet is exhaustive.  A cover is minimal exactly
    when every vertex in its support lies in some complement facet of weight
    exactly m (decrementing that vertex then breaks the cover).
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    inc = _complement_incidence(cx)
    if inc.shape[0] == 0 or not inc.any():
        return []  # simplex: the ideal is zero
    support = np.flatnonzero(inc.any(axis=0))
    sub = inc[:, support]
    out: list[ExponentVector] = []
    for pts in _box_chunks(len(support), m):
        sums = pts @ sub.T
        cover = (sums >= m).all(axis=1)
        if not cover.any():
            continue
        pts, sums = pts[cover], sums[cover]
        tight = (sums == m).astype(np.int64) @ sub > 0
        minimal = ((pts == 0) | tight).all(axis=1)
        for row in pts[minimal]:
            a = [0] * cx.n
            for j, val in zip(support, row):
                a[j] = int(val)
            out.append(tuple(a))
    out.sort(key=vector_key)
    return out


def minimal_one_covers(cx: SimplicialComplex) -> list[ExponentVector]:
    """Incidence vectors of the minimal nonfaces (the minimal 1-covers)."""
    vecs = []
    for h in cx.minimal_nonface_masks():
        vecs.append(tuple(h >> i & 1 for i in range(cx.n)))
    vecs.sort(key=vector_key)
    return vecs


@dataclass(frozen=True)
class CoverDecomposition:
    parts: tuple[ExponentVector, ...]

    @property
    def total(self) -> ExponentVector:
        return tuple(map(sum, zip(*self.parts)))


class Decomposer:
    """Splits covers into sums of 1-covers, memoising across calls.

    ``find(a, m)`` looks for m minimal 1-covers whose sum is dominated by
    ``a``; leftover weight can always be absorbed by one of the parts.
    """

    def __init__(self, cx: SimplicialComplex):
        self.cx = cx
        self.ones = minimal_one_covers(cx)
        self._memo: dict[tuple[ExponentVector, int, int], tuple[int, ...] | None] = {}

    def _search(self, residual: ExponentVector, k: int, start: int) -> tuple[int, ...] | None:
        if k == 0:
            return ()
        key = (residual, k, start)
        if key in self._memo:
            return self._memo[key]
        found = None
        for i in range(start, len(self.ones)):
            c = self.ones[i]
            if all(x <= r for x, r in zip(c, residual)):
                rest = self._search(tuple(r - x for r, x in zip(residual, c)), k - 1, i)
                if rest is not None:
                    found = (i,) + rest
                    break
        self._memo[key] = found
        return found

    def find(self, a: Sequence[int], m: int) -> CoverDecomposition | None:
        if m < 1:
            raise ValueError("m must be at least 1")
        a = tuple(a)
        picks = self._search(a, m, 0)
        if picks is None:
            return None
        parts = [list(self.ones[i]) for i in picks]
        used = [sum(col) for col in zip(*parts)]
        for j, (x, u) in enumerate(zip(a, used)):
            parts[-1][j] += x - u
        return CoverDecomposition(tuple(tuple(p) for p in parts))


def decompose_m_cover(cx: SimplicialComplex, a: Sequence[int], m: int) -> CoverDecomposition | None:
    """Write the m-cover ``a`` as a sum of m 1-covers, or return None."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if not is_m_cover(cx, a, m):
        raise ValueError(f"{tuple(a)} is not a {m}-cover")
    return Decomposer(cx).find(a, m)
