"""Simplicial complexes on the vertex set {1, ..., n}.

Vertex sets are stored internally as integer bitmasks (bit ``i - 1`` stands
for vertex ``i``); every public function accepts any iterable of 1-based
vertices and returns ``frozenset`` objects or lists of sorted tuples.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 32


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def _sort_key(mask: int):
    return (mask.bit_count(), from_mask(mask))


def antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Drop every set contained in another one; return in canonical order."""
    uniq = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=_sort_key))


def subsets_of_mask(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class FaceQueryResult:
    is_face: bool
    containing_facets: tuple[int, ...]


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets (bitmasks, canonically ordered).

    ``facets == (0,)`` is the complex ``{emptyset}``; ``facets == ()`` is the
    void complex, which only shows up as an intermediate result (for example
    ``delta_V`` of a vertex set that no facet comes close to).
    """

    n: int
    facets: tuple[int, ...]

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(n, antichain(masks))

    # -- basic data --------------------------------------------------------

    @property
    def facet_sets(self) -> list[tuple[int, ...]]:
        return [from_mask(f) for f in self.facets]

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def vertices(self) -> tuple[int, ...]:
        return from_mask(self.vertex_mask)

    @property
    def dim(self) -> int:
        if not self.facets:
            raise ComplexError("the void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def is_pure(self) -> bool:
        sizes = {f.bit_count() for f in self.facets}
        return len(sizes) <= 1

    def is_void(self) -> bool:
        return not self.facets

    def is_face(self, face: Iterable[int] | int) -> bool:
        fm = face if isinstance(face, int) else to_mask(face)
        return any(fm & f == fm for f in self.facets)

    def face_query(self, face: Iterable[int]) -> FaceQueryResult:
        fm = to_mask(face)
        hits = tuple(i for i, f in enumerate(self.facets) if fm & f == fm)
        return FaceQueryResult(bool(hits), hits)

    def faces(self) -> list[int]:
        """Every face (as a mask), including the empty face, sorted canonically."""
        seen: set[int] = set()
        for f in self.facets:
            seen.update(subsets_of_mask(f))
        return sorted(seen, key=_sort_key)

    def faces_of_size(self, k: int) -> list[int]:
        seen: set[int] = set()
        for f in self.facets:
            if f.bit_count() >= k:
                for c in combinations(from_mask(f), k):
                    seen.add(to_mask(c))
        return sorted(seen, key=_sort_key)

    # -- derived complexes -------------------------------------------------

    def _require_face(self, fm: int) -> None:
        if not self.is_face(fm):
            raise ComplexError(f"{sorted(from_mask(fm))} is not a face")

    def link(self, face: Iterable[int] = ()) -> "SimplicialComplex":
        fm = to_mask(face)
        self._require_face(fm)
        return SimplicialComplex.from_masks(
            self.n, (f & ~fm for f in self.facets if fm & f == fm))

    def star(self, face: Iterable[int] = ()) -> "SimplicialComplex":
        fm = to_mask(face)
        self._require_face(fm)
        return SimplicialComplex(self.n, tuple(f for f in self.facets if fm & f == fm))

    def delta_V(self, V: Iterable[int]) -> "SimplicialComplex":
        """Subcomplex generated by the facets meeting V in at least |V| - 1 vertices."""
        vm = to_mask(V)
        k = vm.bit_count()
        if k < 2:
            raise ComplexError("delta_V needs |V| >= 2")
        return SimplicialComplex(
            self.n, tuple(f for f in self.facets if (f & vm).bit_count() >= k - 1))

    def delta_c(self) -> "SimplicialComplex":
        full = (1 << self.n) - 1
        return SimplicialComplex.from_masks(self.n, (full & ~f for f in self.facets))

    def union(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex.from_masks(max(self.n, other.n), self.facets + other.facets)

    def intersection(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex.from_masks(
            max(self.n, other.n), (f & g for f in self.facets for g in other.facets))

    def edge_graph(self):
        from .graphs import SimpleGraph

        adj = [0] * self.n
        for f in self.facets:
            for v in from_mask(f):
                adj[v - 1] |= f & ~(1 << (v - 1))
        return SimpleGraph(self.n, tuple(adj))

    def minimal_nonfaces(self) -> list[frozenset[int]]:
        return [frozenset(from_mask(m)) for m in self.minimal_nonface_masks()]

    def minimal_nonface_masks(self) -> tuple[int, ...]:
        # A minimal nonface H has every H - {v} a face, so H lies in
        # (some facet) + one vertex; this keeps the search small.
        cands: set[int] = set()
        for f in self.facets:
            for v in range(self.n):
                bit = 1 << v
                if f & bit:
                    continue
                for sub in subsets_of_mask(f):
                    h = sub | bit
                    if h not in cands and not self.is_face(h):
                        if all(self.is_face(h & ~(1 << (u - 1))) for u in from_mask(h)):
                            cands.add(h)
        return tuple(sorted(cands, key=_sort_key))

    # -- misc --------------------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "SimplicialComplex":
        """Apply the vertex map ``i -> perm[i - 1]`` (a permutation of 1..n)."""
        out = []
        for f in self.facets:
            out.append(to_mask(perm[v - 1] for v in from_mask(f)))
        return SimplicialComplex.from_masks(self.n, out)

    def cone(self) -> "SimplicialComplex":
        apex = 1 << self.n
        return SimplicialComplex.from_masks(self.n + 1, (f | apex for f in self.facets))

    def to_dict(self) -> dict:
        return {"n": self.n, "facets": [list(s) for s in self.facet_sets]}

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, s)) + "}" for s in self.facet_sets)
        return f"SimplicialComplex(n={self.n}, [{body}])"


def from_facets(n: int, raw: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Build a complex on [n], reducing ``raw`` to its inclusion-maximal sets.

    Rejects vertices outside 1..n, n > 32, and vertices that lie in no facet.
    """
    if n < 1:
        raise ComplexError("n must be at least 1")
    if n > MAX_VERTICES:
        raise ComplexError(f"at most {MAX_VERTICES} vertices are supported")
    masks = []
    for s in raw:
        s = list(s)
        for v in s:
            if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
                raise ComplexError(f"vertex {v!r} is outside 1..{n}")
        masks.append(to_mask(s))
    cx = SimplicialComplex.from_masks(n, masks)
    missing = ((1 << n) - 1) & ~cx.vertex_mask
    if missing:
        raise ComplexError(f"vertices {list(from_mask(missing))} lie in no facet")
    return cx


def simplex(n: int) -> SimplicialComplex:
    return from_facets(n, [range(1, n + 1)])


# -- file formats ------------------------------------------------------------


def parse_json(text: str) -> SimplicialComplex:
    data = json.loads(text)
    try:
        return from_facets(int(data["n"]), data["facets"])
    except (KeyError, TypeError) as exc:
        raise ComplexError(f"malformed complex JSON: {exc}") from exc


def parse_lines(text: str) -> SimplicialComplex:
    """Parse ``n=6`` followed by one space-separated facet per line."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise ComplexError("line format must start with 'n=<count>'")
    try:
        n = int(lines[0].replace(" ", "")[2:])
        facets = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise ComplexError(f"malformed line-format complex: {exc}") from exc
    return from_facets(n, facets)


def parse_complex(text: str) -> SimplicialComplex:
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_lines(text)


def load_complex(path: str | Path) -> SimplicialComplex:
    return parse_complex(Path(path).read_text())


def dumps(cx: SimplicialComplex) -> str:
    return json.dumps(cx.to_dict())


def to_lines(cx: SimplicialComplex) -> str:
    rows = [f"n={cx.n}"] + [" ".join(map(str, s)) for s in cx.facet_sets]
    return "\n".join(rows) + "\n"
