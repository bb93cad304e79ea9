"""List the atomic counting comparisons each kind implies over a finite universe."""

from _common import emit, parse_config

from eqred.experiments import NiceScanConfig, run_nice_scan

if __name__ == "__main__":
    cfg, out = parse_config(NiceScanConfig, __doc__)
    emit(run_nice_scan(cfg), out)
