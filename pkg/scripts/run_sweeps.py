#!/usr/bin/env python3
"""Run the four parameter sweeps and write one sweep.csv per parameter.

Connectivity, population and evidence-count sweeps use the random giant
trial; the polarization sweep runs on both polarized network kinds, mirroring
the two-panel comparison.
"""

import argparse
import sys
from pathlib import Path

from beliefnet.config import SimConfig
from beliefnet.experiments import sweep, trial_config
from beliefnet.storage import write_sweep

C_LEVELS = [0.0, 0.25, 0.5, 0.75, 1.0]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("out/sweeps"))
    parser.add_argument("--seeds", type=int, default=10)
    args = parser.parse_args()
    seeds = list(range(args.seeds))
    args.out.mkdir(parents=True, exist_ok=True)

    jobs = [
        ("connectivity", [4, 10, 15, 20, 25, 30, 35, 40], SimConfig(), "sweep_connectivity.csv"),
        ("population", [100, 200, 400, 800], SimConfig(), "sweep_population.csv"),
        ("evidence_count", [2, 5, 10, 20], SimConfig(), "sweep_evidence.csv"),
        ("polarization_index", [round(0.1 * i, 1) for i in range(11)],
         trial_config("polarized_giant"), "sweep_polarization_giant.csv"),
        ("polarization_index", [round(0.1 * i, 1) for i in range(11)],
         trial_config("polarized_communities"), "sweep_polarization_communities.csv"),
    ]
    for parameter, values, base, filename in jobs:
        print(f"sweep {filename}: {len(values)} values x {len(C_LEVELS)} c x "
              f"{len(seeds)} seeds", file=sys.stderr)
        results = sweep(parameter, values, C_LEVELS, seeds, base)
        write_sweep(results, args.out / filename)
    return 0


if __name__ == "__main__":
    sys.exit(main())
