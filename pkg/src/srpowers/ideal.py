"""Monomial ideals: Stanley-Reisner ideals, their powers and symbolic powers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .complex import SimplicialComplex, to_mask
from .covers import Decomposer, ExponentVector, minimal_m_covers, vector_key

GENERATOR_CAP = 200_000


class GeneratorCapExceeded(RuntimeError):
    pass


def divides(g: Sequence[int], a: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(g, a))


def minimalize(vectors: Iterable[Sequence[int]]) -> list[ExponentVector]:
    """Keep the vectors not dominating another one; graded-lex sorted."""
    uniq = sorted({tuple(v) for v in vectors}, key=vector_key)
    if not uniq:
        return []
    arr = np.array(uniq, dtype=np.int64)
    keep = []
    kept_rows: list[int] = []
    for i, row in enumerate(arr):
        if kept_rows and (arr[kept_rows] <= row).all(axis=1).any():
            continue
        kept_rows.append(i)
        keep.append(uniq[i])
    return keep


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[ExponentVector, ...]

    @classmethod
    def from_generators(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n or any(x < 0 for x in g):
                raise ValueError(f"bad exponent vector {g} for {n} variables")
        return cls(n, tuple(minimalize(gens)))

    @classmethod
    def from_strings(cls, n: int, monomials: Iterable[str]) -> "MonomialIdeal":
        return cls.from_generators(n, (parse_monomial(s, n) for s in monomials))

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    def to_strings(self) -> list[str]:
        return [format_monomial(g) for g in self.gens]

    def to_dict(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.gens]}

    def __repr__(self) -> str:
        return f"MonomialIdeal(n={self.n}, ({', '.join(self.to_strings())}))"


_TERM = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> ExponentVector:
    """Parse ``"x1*x2^3"`` (or ``"1"``) into an exponent vector."""
    a = [0] * n
    text = text.replace(" ", "")
    if text == "1":
        return tuple(a)
    for term in text.split("*"):
        mt = _TERM.match(term)
        if not mt:
            raise ValueError(f"cannot parse monomial term {term!r}")
        i, e = int(mt.group(1)), int(mt.group(2) or 1)
        if not 1 <= i <= n:
            raise ValueError(f"variable x{i} outside x1..x{n}")
        a[i - 1] += e
    return tuple(a)


def format_monomial(a: Sequence[int]) -> str:
    terms = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(a) if e]
    return "*".join(terms) if terms else "1"


# -- Stanley-Reisner correspondence ---------------------------------------------


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    gens = [tuple(h >> i & 1 for i in range(cx.n)) for h in cx.minimal_nonface_masks()]
    return MonomialIdeal(cx.n, tuple(sorted(gens, key=vector_key)))


def complex_from_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces are the squarefree monomials outside ``ideal``."""
    if not ideal.is_squarefree:
        raise ValueError("only squarefree monomial ideals correspond to complexes")
    gmasks = [to_mask(i + 1 for i, x in enumerate(g) if x) for g in ideal.gens]
    if any(m.bit_count() < 2 for m in gmasks):
        raise ValueError("a generator of degree <= 1 leaves some vertex out of the complex")
    n = ideal.n
    if n > 20:
        raise ValueError("complex_from_ideal scans all subsets; n <= 20 only")
    faces = [s for s in range(1 << n) if not any(g & s == g for g in gmasks)]
    return SimplicialComplex.from_masks(n, faces)


# -- powers ---------------------------------------------------------------------


def _product_step(left: list[ExponentVector], right: Sequence[ExponentVector], cap: int) -> list[ExponentVector]:
    prods = {tuple(x + y for x, y in zip(a, b)) for a in left for b in right}
    if len(prods) > cap:
        raise GeneratorCapExceeded(f"{len(prods)} products exceed the cap of {cap}")
    return minimalize(prods)


def power(ideal: MonomialIdeal, m: int, cap: int = GENERATOR_CAP) -> MonomialIdeal:
    """Minimal generators of the ordinary power ``ideal**m``."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if ideal.is_zero:
        return ideal
    cur = list(ideal.gens)
    for _ in range(m - 1):
        cur = _product_step(cur, ideal.gens, cap)
    return MonomialIdeal(ideal.n, tuple(cur))


def symbolic_power(cx: SimplicialComplex, m: int) -> MonomialIdeal:
    """The m-th symbolic power, generated by the minimal m-covers."""
    return MonomialIdeal(cx.n, tuple(minimal_m_covers(cx, m)))


def contains_monomial(ideal: MonomialIdeal, a: Sequence[int], m: int = 1) -> bool:
    """Whether ``x^a`` lies in ``ideal**m`` (some generator divides it)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return any(divides(g, a) for g in power(ideal, m).gens)


def is_complete_intersection(ideal: MonomialIdeal) -> bool:
    """Squarefree case: generators have pairwise disjoint supports."""
    if not ideal.is_squarefree:
        raise ValueError("complete-intersection test is for squarefree ideals")
    seen = 0
    for g in ideal.gens:
        m = to_mask(i + 1 for i, x in enumerate(g) if x)
        if m & seen:
            return False
        seen |= m
    return True


# -- equality of powers -------------------------------------------------------------


@dataclass(frozen=True)
class EqualityVerdict:
    equal: bool
    witness: ExponentVector | None = None

    def __post_init__(self) -> None:
        if self.equal == (self.witness is not None):
            raise ValueError("a witness is present exactly when the powers differ")

    def to_dict(self) -> dict:
        return {"equal": self.equal, "witness": None if self.witness is None else list(self.witness)}


def powers_equal(cx: SimplicialComplex, m: int, decomposer: Decomposer | None = None) -> EqualityVerdict:
    """Decide whether the m-th symbolic and ordinary powers coincide.

    Every minimal m-cover must split into m 1-covers.  The witness on
    failure is the graded-lex least minimal m-cover that does not split.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    dec = decomposer or Decomposer(cx)
    for a in minimal_m_covers(cx, m):
        if dec.find(a, m) is None:
            return EqualityVerdict(False, a)
    return EqualityVerdict(True)


def powers_equal_by_products(cx: SimplicialComplex, m: int) -> EqualityVerdict:
    """Same question answered by divisibility against the expanded power."""
    gens = power(stanley_reisner_ideal(cx), m).gens
    if not gens:
        return EqualityVerdict(True)
    garr = np.array(gens, dtype=np.int64)
    for a in minimal_m_covers(cx, m):
        if not (garr <= np.array(a)).all(axis=1).any():
            return EqualityVerdict(False, a)
    return EqualityVerdict(True)


__all__ = [
    "MonomialIdeal", "EqualityVerdict", "GeneratorCapExceeded", "stanley_reisner_ideal",
    "complex_from_ideal", "power", "symbolic_power", "contains_monomial", "powers_equal",
    "powers_equal_by_products", "is_complete_intersection", "minimalize",
]
