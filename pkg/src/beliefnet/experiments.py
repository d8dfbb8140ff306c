"""Trial presets, parameter sweeps and distribution statistics.

Three named trials cover the standard scenarios: fully random initialization
on a giant-component network, polarized initialization on a two-community
network, and the same polarized agents scattered across a giant component.
Sweeps run the Cartesian product of parameter values, self-confidence levels
and seeds, one independent simulation per cell.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import agents, dynamics, graphs
from .config import ConfigError, SimConfig

TRIAL_PRESETS: dict[str, dict] = {
    "random_giant": {
        "network_kind": "giant", "confidence_mode": "random", "polarization_index": 0.5,
    },
    "polarized_communities": {
        "network_kind": "communities", "confidence_mode": "polarized",
        "polarization_index": 0.8, "a": 0.8,
    },
    "polarized_giant": {
        "network_kind": "giant", "confidence_mode": "polarized",
        "polarization_index": 0.8, "a": 0.8,
    },
}
TRIAL_KINDS = tuple(TRIAL_PRESETS)

# sweepable parameter -> SimConfig field
SWEEP_PARAMETERS = {
    "connectivity": "k",
    "population": "n",
    "polarization_index": "polarization_index",
    "evidence_count": "m",
}


@dataclass
class SweepResult:
    """Summary of one run, keyed by the swept parameter value, c and seed."""

    parameter: str
    value: float | int | str
    c: float
    seed: int
    final_belief_std: float
    final_belief_mean: float
    mean_pressure: float
    max_pressure: float


@dataclass(eq=False)
class RunOutput:
    """Everything a single simulation produced, ready for the writers."""

    config: SimConfig
    graph: graphs.Graph
    weights: graphs.WeightMatrix
    groups: np.ndarray
    understanding: np.ndarray
    trajectory: list[dynamics.SimState]


def belief_std(beliefs: np.ndarray) -> float:
    """Population standard deviation (divide by n) of a belief vector."""
    return float(np.std(np.asarray(beliefs, dtype=float)))


def belief_histogram(beliefs: np.ndarray, bins: int) -> list[tuple[float, int]]:
    """Counts over `bins` uniform bins on [0, 1], right-open except the last."""
    if bins < 1:
        raise ConfigError(f"bins must be >= 1, got {bins}", "bins")
    x = np.asarray(beliefs, dtype=float)
    edges = np.arange(bins + 1) / bins
    idx = np.searchsorted(edges, x, side="right") - 1
    idx = np.clip(idx, 0, bins - 1)
    counts = np.bincount(idx, minlength=bins)
    return [(float(edges[j]), int(counts[j])) for j in range(bins)]


def trial_config(kind: str, seed: int = 0, **overrides) -> SimConfig:
    """Baseline configuration for one of the named trials."""
    if kind not in TRIAL_PRESETS:
        raise ConfigError(f"unknown trial kind {kind!r}; expected one of {TRIAL_KINDS}")
    cfg = SimConfig(seed=seed).replace(**TRIAL_PRESETS[kind])
    if overrides:
        cfg = cfg.replace(**overrides)
    return cfg.validate()


def build_inputs(cfg: SimConfig) -> tuple[graphs.Graph, graphs.WeightMatrix, np.ndarray, np.ndarray, np.ndarray]:
    """Assemble graph, weights, groups, understanding and initial confidence."""
    if cfg.network_kind == "giant":
        g = graphs.generate_er(cfg.n, cfg.k, cfg.seed)
        if cfg.confidence_mode == "polarized":
            # polarized halves scattered randomly inside the giant component
            groups = agents.random_half_groups(cfg.n, cfg.seed)
        else:
            groups = g.group
    else:
        g = graphs.generate_two_community(cfg.n, cfg.k_in, cfg.k_out, cfg.seed)
        groups = g.group
    w = graphs.sinkhorn_normalize(
        g, add_self_loops=cfg.add_self_loops, tol=cfg.sinkhorn_tol,
        max_iter=cfg.sinkhorn_max_iter,
    )
    u = agents.init_understanding(cfg.n, cfg.m, cfg.polarization_index, cfg.seed)
    if cfg.confidence_mode == "polarized":
        b0 = agents.init_confidence_polarized(cfg.n, cfg.m, cfg.a, groups)
    else:
        b0 = agents.init_confidence_random(cfg.n, cfg.m, cfg.seed)
    return g, w, groups, u, b0


def run_config(cfg: SimConfig) -> RunOutput:
    """Run one full simulation described by `cfg`."""
    cfg.validate()
    g, w, groups, u, b0 = build_inputs(cfg)
    trajectory = dynamics.run_simulation(w, u, b0, cfg.c, cfg.steps)
    return RunOutput(config=cfg, graph=g, weights=w, groups=groups,
                     understanding=u, trajectory=trajectory)


def make_result(parameter: str, value, cfg: SimConfig,
                trajectory: list[dynamics.SimState]) -> SweepResult:
    """Collapse a trajectory into one sweep row.

    Pressure statistics aggregate over every agent and every recorded step;
    belief statistics describe the final step only.
    """
    final = trajectory[-1].beliefs
    pressures = np.stack([state.pressure for state in trajectory])
    return SweepResult(
        parameter=parameter,
        value=value,
        c=cfg.c,
        seed=cfg.seed,
        final_belief_std=belief_std(final),
        final_belief_mean=float(np.mean(final)),
        mean_pressure=float(np.mean(pressures)),
        max_pressure=float(np.max(pressures)),
    )


def run_trial(kind: str, seed: int = 0, overrides: dict | None = None
              ) -> tuple[RunOutput, SweepResult]:
    """Run one named trial and summarize it."""
    cfg = trial_config(kind, seed=seed, **(overrides or {}))
    out = run_config(cfg)
    return out, make_result("trial", kind, cfg, out.trajectory)


def sweep(parameter: str, values: list, c_levels: list[float], seeds: list[int],
          base: SimConfig | None = None) -> list[SweepResult]:
    """Cartesian product of independent runs, ordered by (value, c, seed).

    Each run inherits the trial kind implied by the base config (network kind
    and confidence mode); only the swept field, c and seed change per cell.
    """
    if parameter not in SWEEP_PARAMETERS:
        raise ConfigError(
            f"unknown sweep parameter {parameter!r}; expected one of {sorted(SWEEP_PARAMETERS)}"
        )
    if not values or not c_levels or not seeds:
        raise ConfigError("sweep values, c_levels and seeds must be nonempty")
    field = SWEEP_PARAMETERS[parameter]
    base = base if base is not None else SimConfig()
    results = []
    for value in sorted(values):
        for c in sorted(c_levels):
            for seed in sorted(seeds):
                cast = int(value) if field in ("n", "m") else float(value)
                cfg = base.replace(**{field: cast, "c": float(c), "seed": int(seed)})
                out = run_config(cfg)
                results.append(make_result(parameter, cast, cfg, out.trajectory))
    return results


def seed_mean(results: list[SweepResult], attr: str = "final_belief_std"
              ) -> dict[tuple[float | int | str, float], float]:
    """Average an attribute over seeds, keyed by (value, c)."""
    groups: dict[tuple, list[float]] = {}
    for r in results:
        groups.setdefault((r.value, r.c), []).append(getattr(r, attr))
    return {key: float(np.mean(vals)) for key, vals in groups.items()}
