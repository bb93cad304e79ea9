"""Implication diagrams as data: nodes, arrows, reflexive-transitive closure, DOT output."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..deciders import decide
from ..relcore import FiniteEqRel, ReductionKind, SizeProfile, canonical_profile

BI_SYMBOLS = {
    ReductionKind.REDUCTION: "∼",
    ReductionKind.EMBEDDING: "≈",
    ReductionKind.SURJECTIVE_REDUCTION: "≼≽",
    ReductionKind.ISOMORPHISM: "≅",
    ReductionKind.INVARIANT_REDUCTION: "∼ⁱ",
    ReductionKind.FULL_REDUCTION: "∼ᶠ",
    ReductionKind.INVARIANT_EMBEDDING: "≈ⁱ",
    ReductionKind.FULL_EMBEDDING: "≈ᶠ",
}


@dataclass(frozen=True)
class DiagramNode:
    id: str
    kind: ReductionKind
    orientation: str  # "EF", "FE" or "both"

    @property
    def label(self) -> str:
        if self.orientation == "both":
            return f"E {BI_SYMBOLS[self.kind]} F"
        if self.kind is ReductionKind.ISOMORPHISM:
            return "E ≅ F"
        s, t = ("E", "F") if self.orientation == "EF" else ("F", "E")
        return f"{s} {self.kind.symbol} {t}"

    def to_json(self) -> dict:
        return {"id": self.id, "relation": self.kind.slug, "orientation": self.orientation, "label": self.label}


@dataclass(frozen=True)
class ImplicationDiagram:
    name: str
    nodes: tuple[DiagramNode, ...]
    edges: tuple[tuple[str, str], ...]

    def __post_init__(self):
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate node id")
        for a, b in self.edges:
            if a not in ids or b not in ids:
                raise ValueError(f"edge {a!r} -> {b!r} references an unknown node")

    def node(self, node_id: str) -> DiagramNode:
        for n in self.nodes:
            if n.id == node_id:
                return n
        raise KeyError(node_id)

    @classmethod
    def from_json(cls, data: dict) -> ImplicationDiagram:
        nodes = tuple(
            DiagramNode(n["id"], ReductionKind.parse(n["relation"]), n.get("orientation", "EF"))
            for n in data["nodes"]
        )
        return cls(data.get("name", "diagram"), nodes, tuple((a, b) for a, b in data["edges"]))

    @classmethod
    def load(cls, path: str) -> ImplicationDiagram:
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def to_json(self) -> dict:
        return {"name": self.name, "nodes": [n.to_json() for n in self.nodes], "edges": [list(e) for e in self.edges]}

    def with_edges(self, edges) -> ImplicationDiagram:
        return ImplicationDiagram(self.name, self.nodes, tuple(edges))


BUILTIN_DIAGRAMS = {1: "directional", 2: "bi-relation"}


def builtin_diagram(which: int | str) -> ImplicationDiagram:
    """The shipped diagrams: 1 or "directional" (15 nodes), 2 or "bi-relation" (8 nodes)."""
    name = BUILTIN_DIAGRAMS.get(which, which)
    if name not in BUILTIN_DIAGRAMS.values():
        raise ValueError(f"unknown diagram {which!r}")
    text = resources.files("eqred.data").joinpath(f"{name}.json").read_text()
    return ImplicationDiagram.from_json(json.loads(text))


def transitive_closure(D: ImplicationDiagram) -> set[tuple[str, str]]:
    """Reflexive-transitive closure of the arrows, by search from every node."""
    succ: dict[str, list[str]] = {n.id: [] for n in D.nodes}
    for a, b in D.edges:
        succ[a].append(b)
    closure = set()
    for start in succ:
        stack, seen = [start], {start}
        while stack:
            for nxt in succ[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        closure.update((start, x) for x in seen)
    return closure


@lru_cache(maxsize=None)
def _exists(kind: ReductionKind, pe: SizeProfile, pf: SizeProfile) -> bool:
    return decide(kind, pe.expand(), pf.expand()).exists


def _profile(r) -> SizeProfile:
    return r if isinstance(r, SizeProfile) else canonical_profile(r)


def evaluate_node(node: DiagramNode, E: FiniteEqRel | SizeProfile, F: FiniteEqRel | SizeProfile) -> bool:
    pe, pf = _profile(E), _profile(F)
    if node.orientation == "EF":
        return _exists(node.kind, pe, pf)
    if node.orientation == "FE":
        return _exists(node.kind, pf, pe)
    return _exists(node.kind, pe, pf) and _exists(node.kind, pf, pe)


def to_dot(D: ImplicationDiagram, overlay_closure: bool = False) -> str:
    """Graphviz source; closure-only arrows (if overlaid) are dashed and grey."""
    index = {n.id: f"n{i}" for i, n in enumerate(D.nodes)}
    lines = [f'digraph "{D.name}" {{', "  rankdir=TB;", '  node [shape=plaintext, fontname="DejaVu Sans"];']
    for n in D.nodes:
        lines.append(f'  {index[n.id]} [label="{n.label}"];')
    drawn = set(D.edges)
    for a, b in D.edges:
        lines.append(f"  {index[a]} -> {index[b]};")
    if overlay_closure:
        for a, b in sorted(transitive_closure(D)):
            if a != b and (a, b) not in drawn:
                lines.append(f'  {index[a]} -> {index[b]} [style=dashed, color=grey60, constraint=false];')
    lines.append("}")
    return "\n".join(lines) + "\n"
