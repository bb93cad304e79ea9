"""Schematic class-size profiles with infinitely many classes, and the counting conditions over them.

A profile is a finite list of entries:

* ``Point(size, count)``: ``count`` classes of one (finite or aleph) size;
* ``ArithmeticFamily(start, step, count)``: ``count`` classes of each finite size
  ``start + step*k`` for ``k >= 0``;
* ``AlephLimitFamily(offset, count)``: ``count`` classes of each size
  ``aleph_{omega*k + offset}`` for ``k >= 1``.

Universally quantified conditions are decided exactly.  In the finite region
every count function is affine-periodic beyond the largest explicit size, with
period the lcm of the family steps; in the aleph region it is affine in the
omega-coefficient beyond the largest explicit aleph index.  Probing a finite
window plus a linear extrapolation therefore covers every kappa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from ..relcore import SizeProfile
from .arithmetic import ALEPH_0, Cardinal, OrdinalW2, aleph, card_sum

MODES = ("eq", "leq", "geq")


@dataclass(frozen=True)
class Point:
    size: Cardinal
    count: Cardinal

    def __post_init__(self):
        object.__setattr__(self, "size", Cardinal.parse(self.size))
        object.__setattr__(self, "count", Cardinal.parse(self.count))
        if self.size < 1 or self.count < 1:
            raise ValueError("point size and count must be at least 1")

    first_index = 0
    is_family = False

    def size_at(self, k: int = 0) -> Cardinal:
        return self.size

    def qualifying(self, mode: str, kappa: Cardinal) -> int | None:
        return int(_holds(mode, self.size, kappa))

    def to_json(self) -> dict:
        return {"type": "point", "size": self.size.to_json(), "count": self.count.to_json()}


@dataclass(frozen=True)
class ArithmeticFamily:
    start: int
    step: int
    count: Cardinal

    def __post_init__(self):
        object.__setattr__(self, "count", Cardinal.parse(self.count))
        if self.start < 1 or self.step < 1 or self.count < 1:
            raise ValueError("arithmetic family needs start >= 1, step >= 1, count >= 1")

    first_index = 0
    is_family = True

    def size_at(self, k: int) -> Cardinal:
        return Cardinal(self.start + self.step * k)

    def index_of(self, size: Cardinal) -> int | None:
        if not size.finite or size.n < self.start or (size.n - self.start) % self.step:
            return None
        return (size.n - self.start) // self.step

    def qualifying(self, mode: str, kappa: Cardinal) -> int | None:
        """Number of indices whose size stands in ``mode`` to kappa; None means infinitely many."""
        if not kappa.finite:
            return None if mode == "leq" else 0
        if mode == "geq":
            return None
        if kappa.n < self.start:
            return 0
        if mode == "eq":
            return int((kappa.n - self.start) % self.step == 0)
        return (kappa.n - self.start) // self.step + 1

    def to_json(self) -> dict:
        return {"type": "arithmetic", "start": self.start, "step": self.step, "count": self.count.to_json()}


@dataclass(frozen=True)
class AlephLimitFamily:
    offset: int
    count: Cardinal

    def __post_init__(self):
        object.__setattr__(self, "count", Cardinal.parse(self.count))
        if self.offset not in (0, 1) or self.count < 1:
            raise ValueError("aleph family needs offset in {0, 1} and count >= 1")

    first_index = 1
    is_family = True

    def size_at(self, k: int) -> Cardinal:
        if k < 1:
            raise ValueError("aleph families are indexed from 1")
        return aleph(OrdinalW2(k, self.offset))

    def index_of(self, size: Cardinal) -> int | None:
        if size.finite or size.aleph.a < 1 or size.aleph.b != self.offset:
            return None
        return size.aleph.a

    def qualifying(self, mode: str, kappa: Cardinal) -> int | None:
        if kappa.finite:
            return None if mode == "geq" else 0
        a, b = kappa.aleph.a, kappa.aleph.b
        if mode == "geq":
            return None
        if mode == "eq":
            return int(a >= 1 and b == self.offset)
        if a < 1:
            return 0
        return (a - 1) + int(self.offset <= b)

    def to_json(self) -> dict:
        return {"type": "aleph_limit", "offset": self.offset, "count": self.count.to_json()}


Entry = Union[Point, ArithmeticFamily, AlephLimitFamily]


def _holds(mode: str, size: Cardinal, kappa: Cardinal) -> bool:
    if mode == "eq":
        return size == kappa
    if mode == "leq":
        return size <= kappa
    if mode == "geq":
        return size >= kappa
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class SymbolicProfile:
    entries: tuple[Entry, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        _check_disjoint(self.entries)

    @classmethod
    def from_size_profile(cls, profile: SizeProfile) -> SymbolicProfile:
        return cls(tuple(Point(Cardinal(s), Cardinal(c)) for s, c in profile.counts))

    @classmethod
    def from_json(cls, data: dict) -> SymbolicProfile:
        entries = []
        for item in data["entries"]:
            kind = item.get("type")
            if kind == "point":
                entries.append(Point(item["size"], item["count"]))
            elif kind == "arithmetic":
                entries.append(ArithmeticFamily(int(item["start"]), int(item["step"]), item.get("count", 1)))
            elif kind == "aleph_limit":
                entries.append(AlephLimitFamily(int(item["offset"]), item.get("count", 1)))
            else:
                raise ValueError(f"unknown entry type {kind!r}")
        return cls(tuple(entries))

    def to_json(self) -> dict:
        return {"entries": [e.to_json() for e in self.entries]}

    @property
    def num_classes(self) -> Cardinal:
        return profile_n(self, "geq", Cardinal(1))


def _check_disjoint(entries) -> None:
    points = [e for e in entries if isinstance(e, Point)]
    sizes = [p.size for p in points]
    if len(set(sizes)) != len(sizes):
        raise ValueError("two point entries share a size")
    arith = [e for e in entries if isinstance(e, ArithmeticFamily)]
    alephs = [e for e in entries if isinstance(e, AlephLimitFamily)]
    if len({e.offset for e in alephs}) != len(alephs):
        raise ValueError("two aleph families share an offset")
    for fam in arith + alephs:
        for s in sizes:
            if fam.index_of(s) is not None:
                raise ValueError(f"size {s} appears in a point entry and in a family")
    for i, f in enumerate(arith):
        for g in arith[i + 1:]:
            lo = max(f.start, g.start)
            if any((n - f.start) % f.step == 0 and (n - g.start) % g.step == 0
                   for n in range(lo, lo + math.lcm(f.step, g.step))):
                raise ValueError("two arithmetic families share a size")


def profile_n(P: SymbolicProfile, mode: str, kappa) -> Cardinal:
    """Number of classes of size equal to / at most / at least ``kappa``."""
    kappa = Cardinal.parse(kappa)
    if kappa < 1:
        raise ValueError("kappa must be at least 1")
    total = []
    for entry in P.entries:
        m = entry.qualifying(mode, kappa)
        total.append(ALEPH_0 * entry.count if m is None else entry.count * m)
    return card_sum(total)


# Counting conditions.  Each item is a list of clauses
# (mode, required relation of lhs to rhs); mode "classes" compares class totals.

CONDITIONS: dict[int, list[tuple[str, str]]] = {
    1: [("classes", "<=")],
    2: [("geq", "<=")],
    3: [("leq", "<="), ("geq", ">=")],
    4: [("eq", "=")],
    5: [("leq", "<=")],
    6: [("classes", "=")],
    7: [("eq", "<=")],
}

# item -> (kind slug, whether the condition characterises the kind or is only necessary)
ITEM_KINDS = {
    1: ("reduction", True),
    2: ("embedding", True),
    3: ("surjective-reduction", False),
    4: ("isomorphism", True),
    5: ("inv-reduction", False),
    6: ("full-reduction", True),
    7: ("inv-embedding", True),
}


@dataclass(frozen=True)
class ConditionVerdict:
    item: int
    holds: bool
    kappa: Cardinal | None = None
    clause: str | None = None
    lhs: Cardinal | None = None
    rhs: Cardinal | None = None
    required: str | None = None

    def __str__(self):
        if self.holds:
            return f"item {self.item}: holds for all kappa"
        where = "" if self.kappa is None else f" at kappa={self.kappa}"
        return f"item {self.item}: fails{where}: {self.clause} {self.lhs} vs {self.rhs} (needs {self.required})"

    def to_json(self) -> dict:
        return {
            "item": self.item,
            "holds": self.holds,
            "kappa": None if self.kappa is None else self.kappa.to_json(),
            "clause": self.clause,
            "lhs": None if self.lhs is None else self.lhs.to_json(),
            "rhs": None if self.rhs is None else self.rhs.to_json(),
            "required": self.required,
        }


def _compare(x: Cardinal, y: Cardinal, rel: str) -> bool:
    return x <= y if rel == "<=" else x >= y if rel == ">=" else x == y


def _first_affine_failure(d0: int, delta: int, rel: str) -> int | None:
    """Least t >= 0 with ``d0 + t*delta`` violating ``rel`` against 0, or None."""
    if rel == "<=":
        if d0 > 0:
            return 0
        return -d0 // delta + 1 if delta > 0 else None
    if rel == ">=":
        if d0 < 0:
            return 0
        return d0 // -delta + 1 if delta < 0 else None
    if d0 != 0:
        return 0
    return 1 if delta != 0 else None


def _window(PE: SymbolicProfile, PF: SymbolicProfile):
    entries = PE.entries + PF.entries
    finite_marks = [1]
    steps = [1]
    aleph_a = [0]
    aleph_b = [1]
    for e in entries:
        if isinstance(e, Point):
            if e.size.finite:
                finite_marks.append(e.size.n)
            else:
                aleph_a.append(e.size.aleph.a)
                aleph_b.append(e.size.aleph.b + 1)
        elif isinstance(e, ArithmeticFamily):
            finite_marks.append(e.start)
            steps.append(e.step)
    return max(finite_marks) + 1, math.lcm(*steps), max(aleph_a), max(aleph_b)


def check_condition(item: int, PE: SymbolicProfile, PF: SymbolicProfile) -> ConditionVerdict:
    """Decide ``for all kappa`` of the counting condition numbered ``item`` (1-7)."""
    if item not in CONDITIONS:
        raise ValueError(f"no counting condition for item {item}")
    clauses = CONDITIONS[item]

    if clauses[0][0] == "classes":
        rel = clauses[0][1]
        a, b = PE.num_classes, PF.num_classes
        if _compare(a, b, rel):
            return ConditionVerdict(item, True)
        return ConditionVerdict(item, False, None, "|X/E| vs |Y/F|", a, b, rel)

    def values(mode, kappa):
        return profile_n(PE, mode, kappa), profile_n(PF, mode, kappa)

    def probe(kappa):
        for mode, rel in clauses:
            a, b = values(mode, kappa)
            if not _compare(a, b, rel):
                return ConditionVerdict(item, False, kappa, f"n_{mode}", a, b, rel)
        return None

    def tail(point, step_to, period):
        """Earliest failure ``t >= 1`` periods past ``point``, as (t, verdict) or None."""
        best = None
        for mode, rel in clauses:
            a0, b0 = values(mode, point)
            a1, b1 = values(mode, step_to(point, period))
            if not (a0.finite and b0.finite):
                continue  # constant beyond the window and already probed
            delta = (a1.n - b1.n) - (a0.n - b0.n)
            t = _first_affine_failure(a0.n - b0.n, delta, rel)
            if t is not None and t >= 1 and (best is None or t < best[0]):
                kappa = step_to(point, t * period)
                a, b = values(mode, kappa)
                best = (t, ConditionVerdict(item, False, kappa, f"n_{mode}", a, b, rel))
        return best

    T, L, A, B = _window(PE, PF)

    # finite kappa: direct window [1, T + L), then affine tail per residue
    for n in range(1, T + L):
        found = probe(Cardinal(n))
        if found:
            return found
    tails = []
    for n in range(T, T + L):
        hit = tail(Cardinal(n), lambda k, s: Cardinal(k.n + s), L)
        if hit:
            tails.append(hit[1])
    if tails:
        return min(tails, key=lambda v: v.kappa)

    # aleph kappa: aleph_{omega*a + b}, direct window then affine in a
    for a in range(0, A + 2):
        for b in range(0, max(B, 2) + 1):
            found = probe(aleph(OrdinalW2(a, b)))
            if found:
                return found
    tails = []
    for b in range(0, 3):
        hit = tail(aleph(OrdinalW2(A + 1, b)),
                   lambda k, s: aleph(OrdinalW2(k.aleph.a + s, k.aleph.b)), 1)
        if hit:
            tails.append(hit[1])
    if tails:
        return min(tails, key=lambda v: v.kappa)
    return ConditionVerdict(item, True)


def double_domination_forces_equality(PE: SymbolicProfile, PF: SymbolicProfile) -> bool:
    """n_k(E) <= n_k(F) and n_k(F) <= n_k(E) for all k must give n_k(E) = n_k(F) for all k."""
    both = check_condition(7, PE, PF).holds and check_condition(7, PF, PE).holds
    return (not both) or check_condition(4, PE, PF).holds
