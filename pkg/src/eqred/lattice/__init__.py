"""Implication diagrams, their verification, and the atomic-condition scan."""

from .diagram import DiagramNode, ImplicationDiagram, builtin_diagram, evaluate_node, to_dot, transitive_closure
from .nice import ALL_ATOMS, NiceAtom, nice_atom_eval, nice_scan
from .verify import (
    CANONICAL_CLAIMS,
    CANONICAL_PAIRS,
    canonical_matrix,
    infinite_fixtures,
    verify_completeness,
    verify_soundness,
)
