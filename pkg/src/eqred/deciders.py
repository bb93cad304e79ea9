"""Exact existence deciders and witness builders for the eight reduction kinds on finite relations.

Existence depends only on the two class-size multisets, so each decider is a
sort-and-compare on sizes.  Witnesses are realised on the concrete relations:
classes are paired by a greedy order (ties broken by lower class index) and
elements are sent in increasing index order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .relcore import (
    FiniteEqRel,
    MapWitness,
    ReductionKind,
    canonical_profile,
    profile_counts,
)

K = ReductionKind


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class Refutation:
    """A violated counting clause: ``lhs <rel> rhs`` was required at ``kappa`` but fails.

    ``clause`` is one of ``n_=``, ``n_≤``, ``n_≥`` or ``classes`` (quotient sizes,
    in which case ``kappa`` is None).
    """

    clause: str
    kappa: int | None
    lhs: int
    rhs: int
    required: str

    def __str__(self):
        shown = {"<=": ">", ">=": "<", "=": "≠"}[self.required]
        if self.clause == "classes":
            return f"|X/E| {shown} |Y/F|: {self.lhs} {shown} {self.rhs}"
        return f"{self.clause}{self.kappa}: {self.lhs} {shown} {self.rhs}"

    def to_json(self) -> dict:
        return {
            "clause": self.clause,
            "kappa": self.kappa,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "required": self.required,
            "text": str(self),
        }


@dataclass(frozen=True)
class Decision:
    kind: ReductionKind
    exists: bool
    witness: MapWitness | None = None
    reason: Refutation | None = None


def _class_order(rel: FiniteEqRel, descending: bool) -> list[tuple[int, ...]]:
    classes = rel.classes()
    order = sorted(range(len(classes)), key=lambda c: (-len(classes[c]) if descending else len(classes[c]), c))
    return [classes[c] for c in order]


def _sorted_sizes(rel: FiniteEqRel, descending: bool = False) -> list[int]:
    return sorted(rel.class_sizes(), reverse=descending)


# existence criteria on sorted size sequences


def _exists(kind: ReductionKind, E: FiniteEqRel, F: FiniteEqRel) -> bool:
    e_up, f_up = _sorted_sizes(E), _sorted_sizes(F)
    e_down, f_down = e_up[::-1], f_up[::-1]
    if kind is K.REDUCTION:
        return len(e_up) <= len(f_up)
    if kind is K.FULL_REDUCTION:
        return len(e_up) == len(f_up)
    if kind is K.ISOMORPHISM:
        return e_up == f_up
    if kind is K.EMBEDDING:
        return len(e_down) <= len(f_down) and all(a <= b for a, b in zip(e_down, f_down))
    if kind is K.FULL_EMBEDDING:
        return len(e_down) == len(f_down) and all(a <= b for a, b in zip(e_down, f_down))
    if kind is K.INVARIANT_REDUCTION:
        return len(e_up) <= len(f_up) and all(a >= b for a, b in zip(e_up, f_up))
    if kind is K.SURJECTIVE_REDUCTION:
        return len(e_up) == len(f_up) and all(a >= b for a, b in zip(e_up, f_up))
    if kind is K.INVARIANT_EMBEDDING:
        pe, pf = canonical_profile(E).as_dict(), canonical_profile(F).as_dict()
        return all(n <= pf.get(s, 0) for s, n in pe.items())
    raise AssertionError(kind)


# witness realisation


def _assemble(E: FiniteEqRel, pairs: list[tuple[tuple[int, ...], tuple[int, ...]]],
              spread: Callable[[int, tuple[int, ...]], int]) -> MapWitness:
    target = [0] * E.ground_size
    for src, dst in pairs:
        for j, x in enumerate(src):
            target[x] = spread(j, dst)
    return MapWitness(E.ground_size, tuple(target))


def _collapse(j, dst):
    return dst[0]


def _inject(j, dst):
    return dst[j]


def _onto(j, dst):
    return dst[min(j, len(dst) - 1)]


def greedy_embedding(E: FiniteEqRel, F: FiniteEqRel) -> MapWitness | None:
    """Injective reduction built by pairing the i-th largest E-class with the i-th largest F-class.

    Both sides are first listed in nondecreasing size (ties by class index) and then
    read from the top.  Returns None exactly when some pairing overflows, i.e. when
    ``n_>=k(E) > n_>=k(F)`` for some k.
    """
    e_classes = _class_order(E, descending=True)
    f_classes = _class_order(F, descending=True)
    if len(e_classes) > len(f_classes):
        return None
    pairs = list(zip(e_classes, f_classes))
    if any(len(c) > len(d) for c, d in pairs):
        return None
    return _assemble(E, pairs, _inject)


def _witness(kind: ReductionKind, E: FiniteEqRel, F: FiniteEqRel) -> MapWitness:
    if kind in (K.EMBEDDING, K.FULL_EMBEDDING):
        w = greedy_embedding(E, F)
        assert w is not None
        return w
    if kind in (K.REDUCTION, K.FULL_REDUCTION):
        pairs = list(zip(_class_order(E, False), _class_order(F, False)))
        return _assemble(E, pairs, _collapse)
    if kind in (K.INVARIANT_REDUCTION, K.SURJECTIVE_REDUCTION, K.ISOMORPHISM):
        pairs = list(zip(_class_order(E, False), _class_order(F, False)))
        return _assemble(E, pairs, _onto)
    if kind is K.INVARIANT_EMBEDDING:
        by_size: dict[int, list[tuple[int, ...]]] = {}
        for d in _class_order(F, False):
            by_size.setdefault(len(d), []).append(d)
        pairs = [(c, by_size[len(c)].pop(0)) for c in _class_order(E, False)]
        return _assemble(E, pairs, _inject)
    raise AssertionError(kind)


def decide(kind: ReductionKind, E: FiniteEqRel, F: FiniteEqRel) -> Decision:
    if _exists(kind, E, F):
        return Decision(kind, True, witness=_witness(kind, E, F))
    return Decision(kind, False, reason=refutation_condition(kind, E, F))


# refutations, computed from the counting functions rather than sorted sequences


def _kappa_range(E: FiniteEqRel, F: FiniteEqRel) -> range:
    top = max(canonical_profile(E).max_size, canonical_profile(F).max_size)
    return range(1, top + 2)


def _first_failure(E, F, clauses) -> Refutation | None:
    pe, pf = canonical_profile(E), canonical_profile(F)
    index = {"n_=": 0, "n_≤": 1, "n_≥": 2}
    for kappa in _kappa_range(E, F):
        ce, cf = profile_counts(pe, kappa), profile_counts(pf, kappa)
        for clause, rel in clauses:
            a, b = ce[index[clause]], cf[index[clause]]
            ok = a <= b if rel == "<=" else a >= b if rel == ">=" else a == b
            if not ok:
                return Refutation(clause, kappa, a, b, rel)
    return None


def _quotient_failure(E, F, rel) -> Refutation | None:
    a, b = E.num_classes, F.num_classes
    ok = a <= b if rel == "<=" else a == b
    return None if ok else Refutation("classes", None, a, b, rel)


_CLAUSES = {
    K.EMBEDDING: [("n_≥", "<=")],
    K.INVARIANT_REDUCTION: [("n_≤", "<=")],
    K.SURJECTIVE_REDUCTION: [("n_≤", "<="), ("n_≥", ">=")],
    # mirror of the surjective case with E and F exchanged
    K.FULL_EMBEDDING: [("n_≤", ">="), ("n_≥", "<=")],
    K.ISOMORPHISM: [("n_=", "=")],
    K.INVARIANT_EMBEDDING: [("n_=", "<=")],
}


def refutation_condition(kind: ReductionKind, E: FiniteEqRel, F: FiniteEqRel) -> Refutation:
    """Least-kappa certificate that no map of ``kind`` exists from E to F."""
    if _exists(kind, E, F):
        raise PreconditionViolated(f"a {kind} from E to F exists")
    if kind is K.REDUCTION:
        found = _quotient_failure(E, F, "<=")
    elif kind is K.FULL_REDUCTION:
        found = _quotient_failure(E, F, "=")
    else:
        found = _first_failure(E, F, _CLAUSES[kind])
        if found is None and kind in (K.SURJECTIVE_REDUCTION, K.FULL_EMBEDDING):
            found = _quotient_failure(E, F, "=")
    if found is None:
        raise AssertionError(f"no failing clause found for {kind}")
    return found
