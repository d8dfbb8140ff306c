#!/usr/bin/env python3
"""Run the three standard trials and write their outputs under an output root.

Each trial directory gets trajectory.csv, nodes.csv, edges.csv, summary.json
(and confidence.csv when --record-confidence is set), ready for the figure
scripts.
"""

import argparse
import sys
from pathlib import Path

from beliefnet.cli import main as cli_main
from beliefnet.experiments import TRIAL_KINDS


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("out/trials"))
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--record-confidence", action="store_true")
    args = parser.parse_args()

    for kind in TRIAL_KINDS:
        cli_args = ["trial", kind, "--seed", str(args.seed),
                    "--out", str(args.out / kind)]
        if args.record_confidence:
            cli_args.append("--record-confidence")
        code = cli_main(cli_args)
        if code != 0:
            return code
        print(f"wrote {args.out / kind}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
