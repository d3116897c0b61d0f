"""Canonical forms of small set systems (graphs and complexes) under S_n.

The canonical form is the least relabelled block list over all labellings
reachable by an individualisation-refinement search.  Refinement splits
vertex classes by the multiset of colour patterns of the blocks through each
vertex; the search only branches inside the first non-singleton class and
skips a vertex whenever swapping it with an already tried vertex of the same
class is an automorphism (twins), which keeps highly symmetric inputs cheap.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from typing import Iterable

from .complex import SimplicialComplex, antichain, from_mask

MAX_CANONICAL_N = 13


@dataclass(frozen=True, order=True)
class CanonicalForm:
    n: int
    key: tuple[int, ...]

    def encode(self) -> bytes:
        return struct.pack(f">B{len(self.key)}I", self.n, *self.key)

    def to_complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.n, antichain(self.key))

    def to_graph(self):
        from .graphs import SimpleGraph

        return SimpleGraph.from_edges(self.n, [from_mask(e) for e in self.key])

    def to_dict(self) -> dict:
        return {"n": self.n, "blocks": [list(from_mask(b)) for b in self.key]}


def _relabel(mask: int, labels: list[int]) -> int:
    out = 0
    v = 0
    while mask:
        if mask & 1:
            out |= 1 << labels[v]
        mask >>= 1
        v += 1
    return out


class _Search:
    def __init__(self, n: int, blocks: Iterable[int]):
        self.n = n
        self.blocks = sorted(set(blocks))
        self.block_set = frozenset(self.blocks)
        self.incident = [[b for b in self.blocks if b >> v & 1] for v in range(n)]
        self.best: tuple[int, ...] | None = None
        self.best_labels: list[int] | None = None
        self._twin: dict[tuple[int, int], bool] = {}

    def refine(self, colours: list[int]) -> list[int]:
        n = self.n
        ncells = len(set(colours))
        while True:
            sigs = []
            for v in range(n):
                pats = []
                for b in self.incident[v]:
                    pats.append(tuple(sorted(colours[w] for w in from_mask_0(b) if w != v)))
                pats.sort()
                sigs.append((colours[v], tuple(pats)))
            order = {s: i for i, s in enumerate(sorted(set(sigs)))}
            colours = [order[s] for s in sigs]
            if len(order) == ncells:
                return colours
            ncells = len(order)

    def twins(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        hit = self._twin.get(key)
        if hit is None:
            bu, bv = 1 << u, 1 << v
            swapped = set()
            for b in self.blocks:
                if bool(b & bu) != bool(b & bv):
                    b ^= bu | bv
                swapped.add(b)
            hit = swapped == self.block_set
            self._twin[key] = hit
        return hit

    def run(self, colours: list[int]) -> None:
        colours = self.refine(colours)
        counts: dict[int, list[int]] = {}
        for v, c in enumerate(colours):
            counts.setdefault(c, []).append(v)
        cells = [counts[c] for c in sorted(counts) if len(counts[c]) > 1]
        if not cells:
            key = tuple(sorted(_relabel(b, colours) for b in self.blocks))
            if self.best is None or key < self.best:
                self.best = key
                self.best_labels = colours
            return
        cell = cells[0]
        tried: list[int] = []
        for v in cell:
            if any(self.twins(u, v) for u in tried):
                continue
            tried.append(v)
            nxt = [2 * c + (1 if (c == colours[v] and w != v) else 0) for w, c in enumerate(colours)]
            self.run(nxt)


def from_mask_0(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def canonical_labeling(n: int, blocks: Iterable[int]) -> tuple[CanonicalForm, list[int]]:
    """Return the canonical form and a labelling (0-based, vertex -> label)."""
    if n > MAX_CANONICAL_N:
        raise ValueError(f"exact canonical forms are limited to n <= {MAX_CANONICAL_N}")
    s = _Search(n, blocks)
    s.run([0] * n)
    return CanonicalForm(n, s.best), s.best_labels


def canonical_form(cx: SimplicialComplex) -> CanonicalForm:
    return canonical_labeling(cx.n, cx.facets)[0]


def graph_canonical_form(g) -> CanonicalForm:
    return canonical_labeling(g.n, g.edge_masks())[0]
