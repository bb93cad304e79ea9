"""Check both implication diagrams for soundness and completeness; optionally write Graphviz files."""

import os

from _common import emit, parse_config

from eqred.experiments import DiagramConfig, run_diagrams

if __name__ == "__main__":
    cfg, out = parse_config(DiagramConfig, __doc__)
    if cfg.dot_dir:
        os.makedirs(cfg.dot_dir, exist_ok=True)
    emit(run_diagrams(cfg), out)
