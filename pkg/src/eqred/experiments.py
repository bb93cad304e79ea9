"""Configurable sweeps behind the scripts in ``scripts/``.

Each config is a plain dataclass; each ``run_*`` returns a JSON-ready dict.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

from . import oracle
from .lattice import builtin_diagram, infinite_fixtures, nice_scan, to_dot, verify_completeness, verify_soundness
from .relcore import ReductionKind


@dataclass
class CensusConfig:
    limit: int = 6
    target: int = 16


@dataclass
class DiagramConfig:
    figures: tuple[int, ...] = (1, 2)
    max_ground: int = 5
    dot_dir: str | None = None
    overlay_closure: bool = True


@dataclass
class NiceScanConfig:
    kinds: tuple[str, ...] = ("inv-reduction", "surjective-reduction")
    max_ground: int = 4


@dataclass
class _Run:
    config: dict
    results: dict = field(default_factory=dict)


def run_census(cfg: CensusConfig) -> dict:
    bound, history = oracle.census(cfg.limit, cfg.target)
    vectors = sorted(f.as_bits() for f in oracle.achievable_property_vectors(bound or cfg.limit))
    run = _Run(dataclasses.asdict(cfg))
    run.results = {"bound": bound, "counts_per_bound": history, "vectors": vectors}
    return dataclasses.asdict(run)


def run_diagrams(cfg: DiagramConfig) -> dict:
    run = _Run(dataclasses.asdict(cfg))
    U = oracle.enumerate_relations(cfg.max_ground)
    for fig in cfg.figures:
        D = builtin_diagram(fig)
        fixtures = infinite_fixtures() if fig == 2 else None
        run.results[D.name] = {
            "soundness": verify_soundness(D, U).to_json(),
            "completeness": verify_completeness(D, U, fixtures).to_json(),
        }
        if cfg.dot_dir:
            with open(f"{cfg.dot_dir}/{D.name}.dot", "w") as fh:
                fh.write(to_dot(D, overlay_closure=cfg.overlay_closure))
    return dataclasses.asdict(run)


def run_nice_scan(cfg: NiceScanConfig) -> dict:
    run = _Run(dataclasses.asdict(cfg))
    U = oracle.enumerate_relations(cfg.max_ground)
    for slug in cfg.kinds:
        run.results[slug] = nice_scan(ReductionKind.parse(slug), U).to_json()
    return dataclasses.asdict(run)
