"""Grow the ground-size bound until every achievable (i)-(v) property vector has appeared."""

from _common import emit, parse_config

from eqred.experiments import CensusConfig, run_census

if __name__ == "__main__":
    cfg, out = parse_config(CensusConfig, __doc__)
    emit(run_census(cfg), out)
