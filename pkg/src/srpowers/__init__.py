"""Symbolic versus ordinary powers of Stanley-Reisner ideals, for small complexes."""

from .canonical import CanonicalForm, canonical_form
from .classify import (
    ClassificationReport, ClassificationResult, enumerate_pure_2complexes,
    enumerate_ramsey_graphs, verify_classification,
)
from .complex import ComplexError, SimplicialComplex, from_facets, load_complex, parse_complex
from .covers import decompose_m_cover, is_m_cover, minimal_m_covers
from .criteria import (
    cm_power_verdict, contains_ktr, dim1_cm_power, equality_verdict, is_matroid, prop_1_3,
    structural_lemmas, symbolic_cm2, thm_2_1, thm_2_2, thm_2_3, thm_2_5, thm_2_6,
)
from .fixtures import load_fixture
from .graphs import SimpleGraph, complement, is_ramsey, ramsey43_cycle_property
from .homology import is_cohen_macaulay, reduced_betti, union_cm_check
from .ideal import (
    MonomialIdeal, power, powers_equal, stanley_reisner_ideal, symbolic_power,
)
from .verdict import ConsistencyError, Verdict, VerdictReport

__version__ = "0.1.0"
