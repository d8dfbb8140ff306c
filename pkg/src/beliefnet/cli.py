"""Command-line entry point: simulate, trial, sweep, validate.

Exit codes: 0 success, 1 configuration/usage error, 2 I/O error. Diagnostics
go to stderr only; output files are written into the --out directory.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import ConfigError, SimConfig, parse_config
from .experiments import (
    SWEEP_PARAMETERS,
    TRIAL_KINDS,
    TRIAL_PRESETS,
    run_config,
    sweep,
)
from .graphs import NotScalableError
from .storage import (
    write_confidence,
    write_network,
    write_summary,
    write_sweep,
    write_trajectory,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_common(parser: argparse.ArgumentParser, with_out: bool = True) -> None:
    parser.add_argument("--config", type=Path, help="JSON config file")
    if with_out:
        parser.add_argument("--out", type=Path, required=True, help="output directory")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--steps", type=int)
    parser.add_argument("--n", type=int)
    parser.add_argument("--k", type=float)
    parser.add_argument("--c", dest="c_value",
                        help="self-confidence level (sweep accepts a comma list)")
    parser.add_argument("--m", type=int)
    parser.add_argument("--polarization", type=float, dest="polarization_index")
    parser.add_argument("--network", choices=["giant", "communities"], dest="network_kind")
    parser.add_argument("--record-confidence", action="store_true", default=None,
                        dest="record_confidence")


def _parse_floats(text: str, flag: str) -> list[float]:
    try:
        values = [float(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise ConfigError(f"{flag} expects a comma-separated list of numbers, got {text!r}")
    if not values:
        raise ConfigError(f"{flag} expects at least one number, got {text!r}")
    return values


def _overrides(args: argparse.Namespace, c_as_float: bool = True) -> dict:
    mapping = {
        "seed": args.seed,
        "steps": args.steps,
        "n": args.n,
        "k": args.k,
        "m": args.m,
        "polarization_index": args.polarization_index,
        "network_kind": args.network_kind,
        "record_confidence": args.record_confidence,
    }
    if c_as_float and args.c_value is not None:
        mapping["c"] = _parse_floats(args.c_value, "--c")[0]
    return {key: val for key, val in mapping.items() if val is not None}


def _base_config(args: argparse.Namespace) -> SimConfig:
    if args.config is not None:
        return parse_config(Path(args.config).read_text())
    return SimConfig()


def _write_run(out, out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    write_trajectory(out.trajectory, out_dir / "trajectory.csv")
    if out.config.record_confidence:
        write_confidence(out.trajectory, out_dir / "confidence.csv")
    write_network(out.graph, out.weights, out_dir, groups=out.groups)
    write_summary(out.config, out.trajectory, out_dir / "summary.json")


def main(argv: list[str] | None = None) -> int:
    parser = _Parser(prog="beliefnet",
                     description="Evidence-based belief dynamics on social networks")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_sim = sub.add_parser("simulate", help="run one configured simulation")
    _add_common(p_sim)

    p_trial = sub.add_parser("trial", help="run a named trial")
    p_trial.add_argument("kind", choices=list(TRIAL_KINDS))
    _add_common(p_trial)

    p_sweep = sub.add_parser("sweep", help="run a parameter sweep")
    p_sweep.add_argument("parameter", choices=sorted(SWEEP_PARAMETERS))
    p_sweep.add_argument("--values", required=True,
                         help="comma-separated parameter values")
    p_sweep.add_argument("--seeds", type=int, default=10,
                         help="number of seeds (base seed, base+1, ...)")
    _add_common(p_sweep)

    p_val = sub.add_parser("validate", help="parse and validate a config, write nothing")
    _add_common(p_val, with_out=False)

    args = parser.parse_args(argv)

    try:
        if args.command == "validate":
            _base_config(args).replace(**_overrides(args))
            return 0

        if args.command == "simulate":
            cfg = _base_config(args).replace(**_overrides(args))
            print(f"simulate: n={cfg.n} seed={cfg.seed}", file=sys.stderr)
            out = run_config(cfg)
            _write_run(out, args.out)
            return 0

        if args.command == "trial":
            cfg = (
                _base_config(args)
                .replace(**TRIAL_PRESETS[args.kind])
                .replace(**_overrides(args))
            )
            print(f"trial {args.kind}: n={cfg.n} seed={cfg.seed}", file=sys.stderr)
            out = run_config(cfg)
            _write_run(out, args.out)
            return 0

        # sweep
        base = _base_config(args).replace(**_overrides(args, c_as_float=False))
        values = _parse_floats(args.values, "--values")
        c_levels = (
            _parse_floats(args.c_value, "--c") if args.c_value is not None else [base.c]
        )
        seeds = [base.seed + i for i in range(args.seeds)]
        print(
            f"sweep {args.parameter}: {len(values)} values x {len(c_levels)} c x "
            f"{len(seeds)} seeds",
            file=sys.stderr,
        )
        results = sweep(args.parameter, values, c_levels, seeds, base)
        args.out.mkdir(parents=True, exist_ok=True)
        write_sweep(results, args.out / "sweep.csv")
        return 0

    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NotScalableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
