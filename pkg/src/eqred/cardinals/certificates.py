"""Validation of user-supplied existence and non-existence certificates over symbolic profiles.

A match certificate lists block-to-block assignments of classes.  Accepting it
means the class map can be realised injectively with the per-class size
relation required by the kind, which gives a map of that kind between any two
relations realising the profiles.  A blocking certificate names a set S of
source blocks whose admissible targets N(S) hold strictly fewer classes than S,
so no injective class assignment exists.

Blocks are referenced by ``{"entry": i}`` for points and
``{"entry": i, "from": k0, "to": k1}`` for family segments (``to`` may be null
for an unbounded segment).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..relcore import ReductionKind
from .arithmetic import ALEPH_0, Cardinal, card_sum
from .profiles import ArithmeticFamily, AlephLimitFamily, Point, SymbolicProfile

K = ReductionKind

# relation the source class size must bear to its target class size
SIZE_RELATION = {
    K.REDUCTION: None,
    K.FULL_REDUCTION: None,
    K.EMBEDDING: "<=",
    K.FULL_EMBEDDING: "<=",
    K.INVARIANT_REDUCTION: ">=",
    K.SURJECTIVE_REDUCTION: ">=",
    K.INVARIANT_EMBEDDING: "=",
    K.ISOMORPHISM: "=",
}

CLASS_SURJECTIVE = {K.SURJECTIVE_REDUCTION, K.ISOMORPHISM, K.FULL_REDUCTION, K.FULL_EMBEDDING}

DIRECTION = {None: "none", "<=": "target", ">=": "source", "=": "equal"}


class CertificateError(ValueError):
    """Structured rejection; ``invariant`` names the violated requirement."""

    def __init__(self, invariant: str, detail: str):
        self.invariant = invariant
        self.detail = detail
        super().__init__(f"{invariant}: {detail}")


@dataclass(frozen=True)
class BlockRef:
    entry: int
    start: int | None = None
    stop: int | None = None  # inclusive; None = unbounded (families only)

    @classmethod
    def from_json(cls, data: dict) -> BlockRef:
        return cls(int(data["entry"]), data.get("from"), data.get("to"))

    def to_json(self) -> dict:
        out: dict = {"entry": self.entry}
        if self.start is not None:
            out["from"] = self.start
            out["to"] = self.stop
        return out


@dataclass(frozen=True)
class Segment:
    """A resolved block: an entry together with a concrete index interval."""

    entry: object
    lo: int
    hi: int | None

    @property
    def length(self) -> int | None:
        return None if self.hi is None else self.hi - self.lo + 1

    def size(self, k: int) -> Cardinal:
        return self.entry.size_at(k)


def resolve(profile: SymbolicProfile, ref: BlockRef, side: str) -> Segment:
    if not 0 <= ref.entry < len(profile.entries):
        raise CertificateError("unknown-block", f"{side} entry {ref.entry} does not exist")
    entry = profile.entries[ref.entry]
    if isinstance(entry, Point):
        if ref.start is not None:
            raise CertificateError("unknown-block", f"{side} entry {ref.entry} is a point and takes no range")
        return Segment(entry, 0, 0)
    lo = entry.first_index if ref.start is None else ref.start
    hi = ref.stop
    if lo < entry.first_index or (hi is not None and hi < lo):
        raise CertificateError("unknown-block", f"{side} entry {ref.entry} has bad range [{lo}, {hi}]")
    return Segment(entry, lo, hi)


def _relation_holds(rel: str | None, s: Cardinal, t: Cardinal) -> bool:
    if rel is None:
        return True
    return s <= t if rel == "<=" else s >= t if rel == ">=" else s == t


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _eventual_sign(src: Segment, dst: Segment) -> int:
    """Sign of (source size - target size) for all large paired indices of an unbounded pairing."""
    s, t = src.entry, dst.entry
    if s.is_family and t.is_family:
        shift = dst.lo - src.lo
        if isinstance(s, ArithmeticFamily) and isinstance(t, ArithmeticFamily):
            slope = s.step - t.step
            return _sign(slope) if slope else _sign(s.start - t.start - t.step * shift)
        if isinstance(s, AlephLimitFamily) and isinstance(t, AlephLimitFamily):
            return _sign(-shift) if shift else _sign(s.offset - t.offset)
        return -1 if isinstance(s, ArithmeticFamily) else 1
    family, point, sign = (s, t, 1) if s.is_family else (t, s, -1)
    # a family eventually exceeds any point, except finite sizes never reach an aleph
    if isinstance(family, ArithmeticFamily) and not point.size.finite:
        return -sign
    return sign


def _sizes_ok_on_range(rel, src: Segment, dst: Segment) -> tuple[bool, object]:
    """Check the size relation on every paired index; returns (ok, offending source index).

    Along a pairing the size difference is monotone in the index, so the two
    endpoints (or the start and the eventual behaviour) decide it.
    """
    if rel is None:
        return True, None
    fam_src = src.entry.is_family
    fam_dst = dst.entry.is_family
    shift = dst.lo - src.lo
    driver = src if fam_src else dst

    def sizes_at(k):
        ks = k if fam_src else 0
        kt = (k + shift if fam_src else k) if fam_dst else 0
        return src.size(ks), dst.size(kt)

    ends = [driver.lo] if driver.hi is None else [driver.lo, driver.hi]
    for k in ends:
        if not _relation_holds(rel, *sizes_at(k)):
            return False, k if fam_src else 0
    if driver.hi is None and (fam_src or fam_dst):
        sign = _eventual_sign(src, dst)
        ok = sign <= 0 if rel == "<=" else sign >= 0 if rel == ">=" else sign == 0
        if not ok:
            return False, "eventually"
    return True, None


@dataclass(frozen=True)
class Assignment:
    source: BlockRef
    target: BlockRef
    count: Cardinal

    @classmethod
    def from_json(cls, data: dict) -> Assignment:
        return cls(BlockRef.from_json(data["source"]), BlockRef.from_json(data["target"]),
                   Cardinal.parse(data.get("count", 1)))

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(), "count": self.count.to_json()}


@dataclass(frozen=True)
class MatchCertificate:
    kind: ReductionKind
    assignments: tuple[Assignment, ...]
    direction: str | None = None

    @classmethod
    def from_json(cls, data: dict) -> MatchCertificate:
        return cls(ReductionKind.parse(data["kind"]),
                   tuple(Assignment.from_json(a) for a in data["assignments"]),
                   data.get("direction"))

    def to_json(self) -> dict:
        return {
            "type": "match",
            "kind": self.kind.slug,
            "direction": DIRECTION[SIZE_RELATION[self.kind]],
            "assignments": [a.to_json() for a in self.assignments],
        }


@dataclass
class _Ledger:
    """Per-entry usage as a list of (index interval, per-index cardinal) contributions."""

    usage: dict[int, list[tuple[int, int | None, Cardinal]]] = field(default_factory=dict)

    def add(self, entry: int, lo: int, hi: int | None, amount: Cardinal):
        self.usage.setdefault(entry, []).append((lo, hi, amount))

    def per_index(self, entry: int, first: int, is_family: bool):
        """Yield (lo, hi, total) over the maximal intervals where usage is constant."""
        pieces = self.usage.get(entry, [])
        cuts = {first}
        for lo, hi, _ in pieces:
            cuts.add(lo)
            if hi is not None:
                cuts.add(hi + 1)
        cuts = sorted(c for c in cuts if c >= first)
        bounds = cuts + [None]
        for a, b in zip(bounds, bounds[1:]):
            hi = None if b is None else b - 1
            if not is_family and a > 0:
                break
            total = card_sum(amt for lo, h, amt in pieces if lo <= a and (h is None or h >= a))
            yield a, (0 if not is_family else hi), total


def _times(amount: Cardinal, length: int | None) -> Cardinal:
    return amount * (ALEPH_0 if length is None else Cardinal(length))


def validate_existence_certificate(PE: SymbolicProfile, PF: SymbolicProfile, cert: MatchCertificate) -> bool:
    """Accept or raise :class:`CertificateError`."""
    rel = SIZE_RELATION[cert.kind]
    if cert.direction is not None and cert.direction != DIRECTION[rel]:
        raise CertificateError("direction", f"{cert.kind} needs direction {DIRECTION[rel]!r}, got {cert.direction!r}")
    src_use, dst_use = _Ledger(), _Ledger()

    for n, a in enumerate(cert.assignments):
        src = resolve(PE, a.source, "source")
        dst = resolve(PF, a.target, "target")
        if a.count < 1:
            raise CertificateError("count", f"assignment {n} moves no classes")
        if src.entry.is_family and dst.entry.is_family:
            if src.length != dst.length:
                raise CertificateError("segment-length", f"assignment {n} pairs segments of different lengths")
            src_use.add(a.source.entry, src.lo, src.hi, a.count)
            dst_use.add(a.target.entry, dst.lo, dst.hi, a.count)
        elif src.entry.is_family:
            src_use.add(a.source.entry, src.lo, src.hi, a.count)
            dst_use.add(a.target.entry, 0, 0, _times(a.count, src.length))
        elif dst.entry.is_family:
            src_use.add(a.source.entry, 0, 0, _times(a.count, dst.length))
            dst_use.add(a.target.entry, dst.lo, dst.hi, a.count)
        else:
            src_use.add(a.source.entry, 0, 0, a.count)
            dst_use.add(a.target.entry, 0, 0, a.count)
        ok, bad = _sizes_ok_on_range(rel, src, dst)
        if not ok:
            raise CertificateError("size-relation",
                                   f"assignment {n} breaks source {rel} target at source index {bad}")

    for i, entry in enumerate(PE.entries):
        for lo, hi, used in src_use.per_index(i, entry.first_index, entry.is_family):
            if used != entry.count:
                raise CertificateError("source-exhaustion",
                                       f"E entry {i} indices [{lo}, {hi}] place {used} of {entry.count} classes")
    for i, entry in enumerate(PF.entries):
        for lo, hi, used in dst_use.per_index(i, entry.first_index, entry.is_family):
            if used > entry.count:
                raise CertificateError("target-capacity",
                                       f"F entry {i} indices [{lo}, {hi}] receive {used} > {entry.count} classes")
            if cert.kind in CLASS_SURJECTIVE and used != entry.count:
                raise CertificateError("target-exhaustion",
                                       f"F entry {i} indices [{lo}, {hi}] receive {used} of {entry.count} classes")
    return True


# blocking certificates


@dataclass(frozen=True)
class BlockingCertificate:
    sources: tuple[BlockRef, ...]
    neighbours: tuple[BlockRef, ...]

    @classmethod
    def from_json(cls, data: dict) -> BlockingCertificate:
        return cls(tuple(BlockRef.from_json(s) for s in data["sources"]),
                   tuple(BlockRef.from_json(t) for t in data.get("neighbours", [])))

    def to_json(self) -> dict:
        return {"type": "blocking",
                "sources": [s.to_json() for s in self.sources],
                "neighbours": [t.to_json() for t in self.neighbours]}


BLOCKABLE = {K.INVARIANT_REDUCTION, K.INVARIANT_EMBEDDING, K.SURJECTIVE_REDUCTION, K.FULL_EMBEDDING, K.EMBEDDING}


def _merge(intervals):
    """Union of (lo, hi|None) integer intervals, merged and sorted."""
    out: list[list] = []
    for lo, hi in sorted(intervals, key=lambda t: t[0]):
        if out and (out[-1][1] is None or lo <= out[-1][1] + 1):
            if out[-1][1] is not None and (hi is None or hi > out[-1][1]):
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return [tuple(x) for x in out]


def _cardinality(intervals) -> Cardinal:
    if any(hi is None for _, hi in intervals):
        return ALEPH_0
    return Cardinal(sum(hi - lo + 1 for lo, hi in intervals))


def _source_sizes(seg: Segment):
    """Min and max size over a segment (max None when unbounded)."""
    lo = seg.size(seg.lo)
    hi = None if seg.hi is None else seg.size(seg.hi)
    return lo, hi


def _admissible(rel: str, sources: list[Segment], target) -> list[tuple[int, int | None]]:
    """Indices of ``target`` whose size is admissible for at least one source class."""
    if rel == "=":
        wanted = []
        for seg in sources:
            if seg.hi is None:
                raise CertificateError("unsupported", "equality constraints need bounded source segments")
            wanted.extend(seg.size(k) for k in range(seg.lo, seg.hi + 1))
        if isinstance(target, Point):
            return [(0, 0)] if target.size in wanted else []
        hits = {target.index_of(s) for s in wanted} - {None}
        return _merge((k, k) for k in hits)

    # the admissible set for <= is an up-set of sizes, for >= a down-set
    mins = [_source_sizes(s)[0] for s in sources]
    maxs = [_source_sizes(s)[1] for s in sources]
    if isinstance(target, Point):
        if rel == "<=":
            return [(0, 0)] if target.size >= min(mins) else []
        if None in maxs or target.size <= max(maxs):
            return [(0, 0)]
        return []
    first = target.first_index
    if rel == "<=":
        floor = min(mins)
        k = _first_index_with(target, lambda t: t >= floor)
        return [] if k is None else [(k, None)]
    if None in maxs:
        return [(first, None)]
    ceiling = max(maxs)
    k = _first_index_with(target, lambda t: t > ceiling)
    if k is None:
        return [(first, None)]
    return [] if k == first else [(first, k - 1)]


def _first_index_with(family, pred) -> int | None:
    """Least index whose size satisfies a monotone predicate, or None."""
    if isinstance(family, ArithmeticFamily):
        lo, hi = 0, 1
        while not pred(family.size_at(hi)):
            hi *= 2
            if hi > 10**12:
                return None
    else:
        lo, hi = 1, 2
        while not pred(family.size_at(hi)):
            hi *= 2
            if hi > 10**12:
                return None
    if pred(family.size_at(lo)):
        return lo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(family.size_at(mid)):
            hi = mid
        else:
            lo = mid
    return hi


def _refs_by_entry(profile, refs, side):
    grouped: dict[int, list] = {}
    for ref in refs:
        seg = resolve(profile, ref, side)
        grouped.setdefault(ref.entry, []).append((seg.lo, seg.hi))
    return {e: _merge(iv) for e, iv in grouped.items()}


def compute_neighbours(PE: SymbolicProfile, PF: SymbolicProfile, kind: ReductionKind,
                       sources) -> dict[int, list[tuple[int, int | None]]]:
    rel = SIZE_RELATION[kind]
    merged = _refs_by_entry(PE, sources, "source")
    segments = [Segment(PE.entries[e], lo, hi) for e, ivs in merged.items() for lo, hi in ivs]
    out = {}
    for j, target in enumerate(PF.entries):
        adm = _admissible(rel, segments, target)
        if adm:
            out[j] = adm
    return out


def blocking_demand_supply(PE, PF, kind, cert: BlockingCertificate) -> tuple[Cardinal, Cardinal, dict]:
    merged = _refs_by_entry(PE, cert.sources, "source")
    demand = card_sum(PE.entries[e].count * _cardinality(ivs) for e, ivs in merged.items())
    nbrs = compute_neighbours(PE, PF, kind, cert.sources)
    supply = card_sum(PF.entries[j].count * _cardinality(ivs) for j, ivs in nbrs.items())
    return demand, supply, nbrs


def validate_blocking_certificate(PE: SymbolicProfile, PF: SymbolicProfile, kind: ReductionKind,
                                  cert: BlockingCertificate) -> bool:
    """Accept or raise :class:`CertificateError`.  Acceptance proves no map of ``kind`` exists."""
    if kind not in BLOCKABLE:
        raise CertificateError("kind", f"{kind} has no per-class size constraint to block on")
    if not cert.sources:
        raise CertificateError("empty", "no source blocks")
    demand, supply, nbrs = blocking_demand_supply(PE, PF, kind, cert)
    claimed = _refs_by_entry(PF, cert.neighbours, "target")
    if claimed != nbrs:
        raise CertificateError("neighbourhood", f"claimed N(S) {claimed} but the admissible targets are {nbrs}")
    if not demand > supply:
        raise CertificateError("hall-inequality", f"demand {demand} does not exceed supply {supply}")
    return True


def certificate_from_json(data: dict):
    if data.get("type") == "blocking":
        return ReductionKind.parse(data["kind"]), BlockingCertificate.from_json(data)
    cert = MatchCertificate.from_json(data)
    return cert.kind, cert


__all__ = [
    "AlephLimitFamily",
    "Assignment",
    "BlockRef",
    "BlockingCertificate",
    "CertificateError",
    "MatchCertificate",
    "certificate_from_json",
    "compute_neighbours",
    "validate_blocking_certificate",
    "validate_existence_certificate",
]
