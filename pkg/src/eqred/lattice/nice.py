"""Atomic counting comparisons between two relations, and the scan for which of them a kind implies.

An atom is ``for all kappa: a R b`` with ``a`` a count function of E, ``b`` one of F
and ``R`` one of six comparisons, 96 atoms in all.  The scan is evidence over a
finite universe, not a proof about all relations.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from functools import lru_cache

from ..deciders import decide
from ..oracle import RelationUniverse
from ..relcore import FiniteEqRel, ReductionKind, SizeProfile, canonical_profile, profile_counts

TERMS = ("n_eq", "n_leq", "n_geq", "classes")
RELATIONS = {
    "<=": operator.le,
    ">=": operator.ge,
    "=": operator.eq,
    "!=": operator.ne,
    "<": operator.lt,
    ">": operator.gt,
}
_TERM_TEXT = {"n_eq": "n_κ({})", "n_leq": "n_≤κ({})", "n_geq": "n_≥κ({})", "classes": "|{}/{}|"}


@dataclass(frozen=True, order=True)
class NiceAtom:
    lhs: str
    rel: str
    rhs: str

    def __str__(self):
        left = "|X/E|" if self.lhs == "classes" else _TERM_TEXT[self.lhs].format("E")
        right = "|Y/F|" if self.rhs == "classes" else _TERM_TEXT[self.rhs].format("F")
        return f"{left} {self.rel} {right}"


ALL_ATOMS: tuple[NiceAtom, ...] = tuple(NiceAtom(a, r, b) for a, r, b in itertools.product(TERMS, RELATIONS, TERMS))


def _term(profile: SizeProfile, term: str, kappa: int) -> int:
    if term == "classes":
        return profile.num_classes
    return profile_counts(profile, kappa)[("n_eq", "n_leq", "n_geq").index(term)]


def _profile(r) -> SizeProfile:
    return r if isinstance(r, SizeProfile) else canonical_profile(r)


def kappa_probes(pe: SizeProfile, pf: SizeProfile) -> range:
    # every count is constant beyond the largest realised size, and there equals its value at infinite kappa
    return range(1, max(pe.max_size, pf.max_size) + 2)


def nice_atom_eval(atom: NiceAtom, E: FiniteEqRel | SizeProfile, F: FiniteEqRel | SizeProfile) -> bool:
    pe, pf = _profile(E), _profile(F)
    cmp = RELATIONS[atom.rel]
    return all(cmp(_term(pe, atom.lhs, k), _term(pf, atom.rhs, k)) for k in kappa_probes(pe, pf))


# necessary conditions whose optimality the scan probes
STATED_CONDITIONS = {
    ReductionKind.INVARIANT_REDUCTION: (NiceAtom("n_leq", "<=", "n_leq"),),
    ReductionKind.SURJECTIVE_REDUCTION: (NiceAtom("n_leq", "<=", "n_leq"), NiceAtom("n_geq", ">=", "n_geq")),
}


@lru_cache(maxsize=None)
def _decided(kind, pe, pf) -> bool:
    return decide(kind, pe.expand(), pf.expand()).exists


@dataclass
class NiceScanReport:
    kind: ReductionKind
    max_ground: int
    pairs: int
    implied_by_kind: list[NiceAtom]
    implied_by_condition: list[NiceAtom]

    @property
    def unexplained(self) -> list[NiceAtom]:
        return sorted(set(self.implied_by_kind) - set(self.implied_by_condition))

    def to_json(self) -> dict:
        return {
            "kind": self.kind.slug,
            "max_ground": self.max_ground,
            "pairs": self.pairs,
            "implied_by_kind": [str(a) for a in self.implied_by_kind],
            "implied_by_condition": [str(a) for a in self.implied_by_condition],
            "implied_by_kind_not_condition": [str(a) for a in self.unexplained],
            "note": "evidence over a finite universe, not a proof",
        }


def nice_scan(kind: ReductionKind, U: RelationUniverse) -> NiceScanReport:
    if kind not in STATED_CONDITIONS:
        raise ValueError(f"nice scan is defined for {', '.join(k.slug for k in STATED_CONDITIONS)}")
    condition = STATED_CONDITIONS[kind]
    pairs = list(U.pairs())
    by_kind = [pq for pq in pairs if _decided(kind, *pq)]
    by_cond = [pq for pq in pairs if all(nice_atom_eval(a, *pq) for a in condition)]
    S = [a for a in ALL_ATOMS if all(nice_atom_eval(a, *pq) for pq in by_kind)]
    T = [a for a in ALL_ATOMS if all(nice_atom_eval(a, *pq) for pq in by_cond)]
    return NiceScanReport(kind, U.max_ground, len(pairs), S, T)
