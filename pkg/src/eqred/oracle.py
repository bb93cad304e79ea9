"""Brute-force ground truth over tiny relations.

Nothing here knows about matchings or counting conditions: existence of a
reduction is decided by trying every total map between the ground sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .relcore import (
    FiniteEqRel,
    MapWitness,
    NotAHomomorphism,
    PropertyFlags,
    ReductionKind,
    SizeProfile,
    classify_map,
    kind_satisfied,
)

DEFAULT_MAX_GROUND = 7
DEFAULT_BUDGET = 10**7


class BoundExceeded(ValueError):
    pass


class BudgetExceeded(ValueError):
    pass


def integer_partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as nonincreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


@dataclass(frozen=True)
class RelationUniverse:
    max_ground: int
    relations: tuple[SizeProfile, ...]

    def pairs(self):
        return itertools.product(self.relations, repeat=2)

    def __len__(self):
        return len(self.relations)


def enumerate_relations(max_ground: int, include_empty: bool = False,
                        bound: int = DEFAULT_MAX_GROUND) -> RelationUniverse:
    if max_ground > bound:
        raise BoundExceeded(f"max_ground={max_ground} exceeds the safety bound {bound}")
    start = 0 if include_empty else 1
    profiles = tuple(
        SizeProfile.from_sizes(p)
        for n in range(start, max_ground + 1)
        for p in integer_partitions(n)
    )
    return RelationUniverse(max_ground, profiles)


def map_count(E: FiniteEqRel, F: FiniteEqRel) -> int:
    return F.ground_size ** E.ground_size


def iter_homomorphisms(E: FiniteEqRel, F: FiniteEqRel, budget: int = DEFAULT_BUDGET):
    """Yield ``(phi, flags)`` for every homomorphism among all |Y|^|X| maps."""
    if map_count(E, F) > budget:
        raise BudgetExceeded(f"{map_count(E, F)} maps exceeds budget {budget}")
    for target in itertools.product(range(F.ground_size), repeat=E.ground_size):
        phi = MapWitness(E.ground_size, target)
        try:
            flags = classify_map(E, F, phi)
        except NotAHomomorphism:
            continue
        yield phi, flags


@lru_cache(maxsize=None)
def achievable_flags(E: FiniteEqRel, F: FiniteEqRel, budget: int = DEFAULT_BUDGET) -> frozenset[PropertyFlags]:
    return frozenset(flags for _, flags in iter_homomorphisms(E, F, budget))


def _as_rel(r) -> FiniteEqRel:
    return r.expand() if isinstance(r, SizeProfile) else r


def oracle_decide(kind: ReductionKind, E, F, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff some map from E to F is a homomorphism of the given kind."""
    flags = achievable_flags(_as_rel(E), _as_rel(F), budget)
    return any(kind_satisfied(kind, f) for f in flags)


def oracle_witness(kind: ReductionKind, E, F, budget: int = DEFAULT_BUDGET) -> MapWitness | None:
    for phi, flags in iter_homomorphisms(_as_rel(E), _as_rel(F), budget):
        if kind_satisfied(kind, flags):
            return phi
    return None


def achievable_property_vectors(max_ground: int, budget: int = DEFAULT_BUDGET,
                                include_empty: bool = False) -> set[PropertyFlags]:
    """All (i)-(v) vectors realised by some homomorphism between relations of ground size <= max_ground."""
    universe = enumerate_relations(max_ground, include_empty=include_empty)
    found: set[PropertyFlags] = set()
    for pe, pf in universe.pairs():
        found |= achievable_flags(pe.expand(), pf.expand(), budget)
    return found


def census(limit: int = 6, target: int = 16) -> tuple[int | None, list[int]]:
    """Grow the bound until ``target`` vectors appear; return (bound reached or None, sizes per bound)."""
    history = []
    for bound in range(1, limit + 1):
        history.append(len(achievable_property_vectors(bound)))
        if history[-1] >= target:
            return bound, history
    return None, history
