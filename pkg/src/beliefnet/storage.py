"""File output and round-trip readers for trajectories, networks and sweeps.

All writers are deterministic: fixed row ordering, fixed 12-significant-digit
number formatting and "\n" line endings, so identical inputs produce
byte-identical files.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .config import SimConfig, serialize_config
from .dynamics import SimState
from .experiments import SweepResult, belief_std
from .graphs import Graph, WeightMatrix


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def write_trajectory(trajectory: list[SimState], path: str | Path) -> None:
    """One row per (step, agent): belief, self-reasoning, pressure."""
    lines = ["step,agent,belief,self_reasoning,pressure"]
    for state in trajectory:
        for agent in range(state.beliefs.size):
            lines.append(
                f"{state.step},{agent},{_fmt(state.beliefs[agent])},"
                f"{_fmt(state.self_reasoning[agent])},{_fmt(state.pressure[agent])}"
            )
    Path(path).write_text("\n".join(lines) + "\n")


def write_confidence(trajectory: list[SimState], path: str | Path) -> None:
    """Companion file: one row per (step, agent, evidence slot)."""
    lines = ["step,agent,evidence,confidence"]
    for state in trajectory:
        n, slots = state.confidence.shape
        for agent in range(n):
            for slot in range(slots):
                lines.append(
                    f"{state.step},{agent},{slot},{_fmt(state.confidence[agent, slot])}"
                )
    Path(path).write_text("\n".join(lines) + "\n")


def write_network(
    graph: Graph,
    weights: WeightMatrix,
    out_dir: str | Path,
    groups: np.ndarray | None = None,
) -> None:
    """nodes.csv (agent,group,degree) and edges.csv (src,dst,weight).

    Edge rows carry src < dst plus diagonal src == dst rows for self-loops,
    globally sorted by (src, dst). `groups` overrides the graph's labels when
    group membership was assigned after generation.
    """
    out_dir = Path(out_dir)
    labels = graph.group if groups is None else np.asarray(groups)
    degrees = graph.degrees()

    lines = ["agent,group,degree"]
    for agent in range(graph.n):
        lines.append(f"{agent},{int(labels[agent])},{int(degrees[agent])}")
    (out_dir / "nodes.csv").write_text("\n".join(lines) + "\n")

    rows = [
        (i, j, w) for (i, j), w in weights.entries().items() if i <= j
    ]
    rows.sort()
    lines = ["src,dst,weight"]
    for i, j, w in rows:
        lines.append(f"{i},{j},{_fmt(w)}")
    (out_dir / "edges.csv").write_text("\n".join(lines) + "\n")


def write_summary(cfg: SimConfig, trajectory: list[SimState], path: str | Path) -> None:
    """summary.json: config echo, final belief stats, pressure stats, std series."""
    final = trajectory[-1].beliefs
    pressures = np.stack([state.pressure for state in trajectory])
    payload = {
        "config": cfg.to_dict(),
        "final_belief_mean": float(np.mean(final)),
        "final_belief_std": belief_std(final),
        "final_belief_min": float(np.min(final)),
        "final_belief_max": float(np.max(final)),
        "mean_pressure": float(np.mean(pressures)),
        "max_pressure": float(np.max(pressures)),
        "belief_std_series": [belief_std(state.beliefs) for state in trajectory],
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def write_sweep(results: list[SweepResult], path: str | Path) -> None:
    """sweep.csv with rows sorted by (value, c, seed)."""
    def _key(r: SweepResult):
        return (r.value, r.c, r.seed)

    lines = ["parameter,value,c,seed,final_std,final_mean,mean_pressure,max_pressure"]
    for r in sorted(results, key=_key):
        value = r.value if isinstance(r.value, str) else _fmt(r.value)
        lines.append(
            f"{r.parameter},{value},{_fmt(r.c)},{r.seed},{_fmt(r.final_belief_std)},"
            f"{_fmt(r.final_belief_mean)},{_fmt(r.mean_pressure)},{_fmt(r.max_pressure)}"
        )
    Path(path).write_text("\n".join(lines) + "\n")


def write_config(cfg: SimConfig, path: str | Path) -> None:
    Path(path).write_text(serialize_config(cfg))


def read_trajectory(path: str | Path) -> dict[str, np.ndarray]:
    """Columns of trajectory.csv as arrays (step, agent, belief, self_reasoning, pressure)."""
    text = Path(path).read_text().strip().split("\n")
    header = text[0].split(",")
    expected = ["step", "agent", "belief", "self_reasoning", "pressure"]
    if header != expected:
        raise ValueError(f"unexpected trajectory header in {path}: {header}")
    cols: dict[str, list] = {name: [] for name in expected}
    for line in text[1:]:
        parts = line.split(",")
        cols["step"].append(int(parts[0]))
        cols["agent"].append(int(parts[1]))
        cols["belief"].append(float(parts[2]))
        cols["self_reasoning"].append(float(parts[3]))
        cols["pressure"].append(float(parts[4]))
    return {name: np.array(vals) for name, vals in cols.items()}


def read_edges(path: str | Path) -> list[tuple[int, int, float]]:
    text = Path(path).read_text().strip().split("\n")
    if text[0] != "src,dst,weight":
        raise ValueError(f"unexpected edges header in {path}: {text[0]}")
    rows = []
    for line in text[1:]:
        i, j, w = line.split(",")
        rows.append((int(i), int(j), float(w)))
    return rows


def read_summary(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())
