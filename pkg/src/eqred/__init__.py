"""Deciding, witnessing and cross-checking reductions between equivalence relations."""

from .deciders import Decision, Refutation, decide, greedy_embedding, refutation_condition
from .relcore import (
    FiniteEqRel,
    MapWitness,
    NotAHomomorphism,
    PropertyFlags,
    ReductionKind,
    SizeProfile,
    canonical_profile,
    classify_map,
    kind_satisfied,
    profile_counts,
)
