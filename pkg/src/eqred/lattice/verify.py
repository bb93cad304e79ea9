"""Soundness and completeness of implication diagrams over finite universes and infinite fixtures."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cardinals.fixtures import Fixture, all_fixtures, symbolic_decide
from ..oracle import RelationUniverse
from ..relcore import ReductionKind, SizeProfile
from .diagram import DiagramNode, ImplicationDiagram, evaluate_node, transitive_closure

K = ReductionKind
_v = SizeProfile.from_vector

# Seven small pairs that separate every non-implication of the directional diagram,
# together with the node values each one is meant to exhibit.
CANONICAL_PAIRS: tuple[tuple[SizeProfile, SizeProfile], ...] = (
    (_v([1]), _v([2])),
    (_v([1]), _v([0, 1])),
    (_v([0, 1]), _v([1])),
    (_v([1]), _v([0, 2])),
    (_v([0, 1]), _v([2])),
    (_v([1, 0, 1]), _v([0, 2])),
    (_v([1, 0, 1]), _v([0, 3])),
)

# (kind, orientation, expected) per canonical pair
CANONICAL_CLAIMS: tuple[tuple[tuple[ReductionKind, str, bool], ...], ...] = (
    ((K.INVARIANT_EMBEDDING, "EF", True), (K.REDUCTION, "FE", False)),
    ((K.FULL_EMBEDDING, "EF", True), (K.INVARIANT_REDUCTION, "EF", False), (K.EMBEDDING, "FE", False)),
    ((K.SURJECTIVE_REDUCTION, "EF", True), (K.EMBEDDING, "EF", False), (K.INVARIANT_REDUCTION, "FE", False)),
    ((K.EMBEDDING, "EF", True), (K.INVARIANT_REDUCTION, "EF", False), (K.REDUCTION, "FE", False)),
    ((K.INVARIANT_REDUCTION, "EF", True), (K.EMBEDDING, "EF", False), (K.REDUCTION, "FE", False)),
    ((K.FULL_REDUCTION, "EF", True), (K.EMBEDDING, "EF", False), (K.INVARIANT_REDUCTION, "EF", False),
     (K.EMBEDDING, "FE", False), (K.INVARIANT_REDUCTION, "FE", False)),
    ((K.REDUCTION, "EF", True), (K.EMBEDDING, "EF", False), (K.INVARIANT_REDUCTION, "EF", False),
     (K.REDUCTION, "FE", False)),
)

# Bi-relation non-implications that need infinitely many classes, and the fixtures that settle them.
INFINITE_FIXTURES = ("evens-vs-odds", "aleph0-blocks-1-vs-2", "singletons-plus-pair")


def canonical_matrix() -> list[dict]:
    rows = []
    for i, ((pe, pf), claims) in enumerate(zip(CANONICAL_PAIRS, CANONICAL_CLAIMS), start=1):
        for kind, orient, expected in claims:
            got = evaluate_node(DiagramNode("", kind, orient), pe, pf)
            rows.append({"pair": i, "E": pe.to_spec(), "F": pf.to_spec(), "node": DiagramNode("", kind, orient).label,
                         "expected": expected, "got": got, "ok": got == expected})
    return rows


def _candidate_pairs(U: RelationUniverse | None):
    """Canonical pairs first (both orientations), then the universe sweep."""
    for i, (pe, pf) in enumerate(CANONICAL_PAIRS, start=1):
        yield f"canonical-{i}", pe, pf
        yield f"canonical-{i}-swapped", pf, pe
    if U is not None:
        for pe, pf in U.pairs():
            yield "universe", pe, pf


@dataclass
class SoundnessReport:
    diagram: str
    pairs_checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"diagram": self.diagram, "sound": self.ok, "pairs_checked": self.pairs_checked,
                "violations": self.violations}


@dataclass
class CompletenessReport:
    diagram: str
    witnesses: dict[tuple[str, str], dict] = field(default_factory=dict)
    canonical_witnesses: dict[tuple[str, str], list[str]] = field(default_factory=dict)
    missing: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing

    def sources(self) -> set[str]:
        return {w["source"] for w in self.witnesses.values()}

    def canonical_used(self) -> set[int]:
        """Canonical pairs (either orientation) that separate at least one non-implication."""
        return {int(s.split("-")[1]) for srcs in self.canonical_witnesses.values() for s in srcs}

    def canonical_suffice(self) -> bool:
        return all(w["source"].startswith("canonical-") for w in self.witnesses.values()) and self.ok

    def to_json(self) -> dict:
        return {
            "diagram": self.diagram,
            "complete": self.ok,
            "non_implications": len(self.witnesses) + len(self.missing),
            "canonical_pairs_used": sorted(self.canonical_used()),
            "canonical_pairs_suffice": self.canonical_suffice(),
            "discharged_by_fixture": sorted(f"{a} =/=> {b}" for (a, b), w in self.witnesses.items()
                                            if w["source"].startswith("fixture:")),
            "witnesses": [{"premise": a, "conclusion": b, **w,
                           "canonical": self.canonical_witnesses.get((a, b), [])}
                          for (a, b), w in sorted(self.witnesses.items())],
            "missing": [{"premise": a, "conclusion": b} for a, b in self.missing],
        }


def verify_soundness(D: ImplicationDiagram, U: RelationUniverse | None) -> SoundnessReport:
    closure = transitive_closure(D)
    report = SoundnessReport(D.name)
    flagged = set()
    for source, pe, pf in _candidate_pairs(U):
        report.pairs_checked += 1
        values = {n.id: evaluate_node(n, pe, pf) for n in D.nodes}
        for a, b in closure:
            if (a, b) not in flagged and values[a] and not values[b]:
                flagged.add((a, b))
                report.violations.append({"premise": a, "conclusion": b, "E": pe.to_spec(),
                                          "F": pf.to_spec(), "source": source})
    return report


def _symbolic_node(node: DiagramNode, fixture: Fixture) -> bool | None:
    if node.orientation in ("EF", "FE"):
        return symbolic_decide(node.kind, fixture, node.orientation[0])
    left = symbolic_decide(node.kind, fixture, "E")
    right = symbolic_decide(node.kind, fixture, "F")
    if left is False or right is False:
        return False
    if left and right:
        return True
    return None


def verify_completeness(D: ImplicationDiagram, U: RelationUniverse | None,
                        fixtures: list[Fixture] | None = None) -> CompletenessReport:
    """Find a witness for every pair of nodes not connected in the closure.

    Finite pairs are tried first; pairs still open are then tried against the
    symbolic fixtures, where node values are only used when established.
    """
    closure = transitive_closure(D)
    non_implications = sorted((a.id, b.id) for a in D.nodes for b in D.nodes if (a.id, b.id) not in closure)
    open_pairs = set(non_implications)
    report = CompletenessReport(D.name)
    for source, pe, pf in _candidate_pairs(U):
        canonical = source.startswith("canonical-")
        if not open_pairs and not canonical:
            break
        values = {n.id: evaluate_node(n, pe, pf) for n in D.nodes}
        for a, b in non_implications:
            if not (values[a] and not values[b]):
                continue
            if canonical:
                report.canonical_witnesses.setdefault((a, b), []).append(source)
            if (a, b) in open_pairs:
                report.witnesses[(a, b)] = {"source": source, "E": pe.to_spec(), "F": pf.to_spec()}
                open_pairs.discard((a, b))
    for fixture in fixtures or []:
        if not open_pairs:
            break
        values = {n.id: _symbolic_node(n, fixture) for n in D.nodes}
        for a, b in sorted(open_pairs):
            if values[a] is True and values[b] is False:
                report.witnesses[(a, b)] = {"source": f"fixture:{fixture.name}"}
                open_pairs.discard((a, b))
    report.missing = sorted(open_pairs)
    return report


def infinite_fixtures() -> list[Fixture]:
    return [f for f in all_fixtures() if f.name in INFINITE_FIXTURES]


def schroeder_bernstein_finite(U: RelationUniverse) -> list[tuple[str, str]]:
    """Pairs where mutual invariant embeddability holds without isomorphism (expected: none)."""
    bad = []
    for pe, pf in U.pairs():
        mutual = evaluate_node(DiagramNode("", K.INVARIANT_EMBEDDING, "both"), pe, pf)
        if mutual and not evaluate_node(DiagramNode("", K.ISOMORPHISM, "EF"), pe, pf):
            bad.append((pe.to_spec(), pf.to_spec()))
    return bad
