"""Exact trace measures and trace equivalence for finite generative
probabilistic transition systems.

Everything is computed over arbitrary-precision rationals: measures of
word sets (single words, cones, the finite/infinite splits), the
determinized linear representation, and equivalence checking with
counterexample words via bisimulation up to congruence.
"""

from .equivalence import (CongruenceBasis, Equivalent, EquivResult,
                          Extraction, Inconclusive, NotEquivalent,
                          OutputKind, basis_contains, basis_insert, hk,
                          hkc_finite, hkc_inf, naive)
from .linear import (Config, LinearRep, build_rep, dirac, dot, out_term,
                     out_total, step, word_transform)
from .measure import (All, AllFinite, AllInfinite, Cone, Empty, FiniteWord,
                      GenSet, InfCone, SingularRestrictedSystem,
                      finite_mass_vector, measure, parse_query,
                      tokenize_word)
from .model import (DistributionSumViolation, DuplicateIdentifier,
                    MalformedRational, ProbabilityOutOfRange, Pts,
                    PtsFormatError, UnknownIdentifier, Violation, Word,
                    format_rational, parse_pts, parse_rational,
                    pts_from_dict, pts_to_dict, serialize_pts, validate)
from .oracle import brute_measure, word_oracle_equiv

__version__ = "0.1.0"

__all__ = [
    "All", "AllFinite", "AllInfinite", "Cone", "Config", "CongruenceBasis",
    "DistributionSumViolation", "DuplicateIdentifier", "Empty",
    "EquivResult", "Equivalent", "Extraction", "FiniteWord", "GenSet",
    "InfCone", "Inconclusive", "LinearRep", "MalformedRational",
    "NotEquivalent", "OutputKind", "ProbabilityOutOfRange", "Pts",
    "PtsFormatError", "SingularRestrictedSystem", "UnknownIdentifier",
    "Violation", "Word", "basis_contains", "basis_insert", "brute_measure",
    "build_rep", "dirac", "dot", "finite_mass_vector", "format_rational",
    "hk", "hkc_finite", "hkc_inf", "measure", "naive", "out_term",
    "out_total", "parse_pts", "parse_query", "parse_rational",
    "pts_from_dict", "pts_to_dict", "serialize_pts", "step",
    "tokenize_word", "validate", "word_oracle_equiv", "word_transform",
]
