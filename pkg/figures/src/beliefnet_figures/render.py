"""Render simulation outputs into figures.

Four figure kinds, all fed purely by the simulator's CSV files:

- timeseries:        belief and pressure vs. step for an agent subset
- histogram:         distribution of belief or pressure at chosen steps
- sweep_curve:       seed-averaged final std vs. parameter, one line per c
- network_snapshot:  initial and final beliefs on a seeded spring layout

No model quantity is recomputed here beyond the plotted aggregates.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import networkx as nx
import numpy as np

from .io import InputError, read_edges, read_nodes, read_sweep, read_trajectory

KINDS = ("timeseries", "histogram", "sweep_curve", "network_snapshot")

GROUP_COLORS = {0: "tab:red", 1: "tab:blue"}
NODE_SIZE_RANGE = (10.0, 120.0)  # linear in belief over [0, 1]


@dataclass
class FigureJob:
    kind: str
    inputs: list[Path]
    out: Path
    agents: int = 40             # subset plotted by timeseries
    bins: int = 10
    color_by_group: bool = True
    layout_seed: int = 7
    column: str = "belief"       # histogram source column
    steps: list[str] = field(default_factory=lambda: ["first", "last"])


def compute_histogram(values, bins: int) -> list[tuple[float, int]]:
    """Counts over uniform bins on [0, 1], right-open except the last."""
    x = np.asarray(values, dtype=float)
    edges = np.arange(bins + 1) / bins
    idx = np.searchsorted(edges, x, side="right") - 1
    idx = np.clip(idx, 0, bins - 1)
    counts = np.bincount(idx, minlength=bins)
    return [(float(edges[j]), int(counts[j])) for j in range(bins)]


def aggregate_sweep(sweep: dict[str, list]) -> dict[float, tuple[list[float], list[float]]]:
    """Seed-averaged final std per parameter value, keyed by c level."""
    sums: dict[tuple[float, float], list[float]] = {}
    for value, c, std in zip(sweep["value"], sweep["c"], sweep["final_std"]):
        sums.setdefault((c, value), []).append(std)
    curves: dict[float, tuple[list[float], list[float]]] = {}
    for c in sorted({key[0] for key in sums}):
        values = sorted(v for cc, v in sums if cc == c)
        means = [float(np.mean(sums[(c, v)])) for v in values]
        curves[c] = (values, means)
    return curves


def _resolve_step(tag: str, steps: list[int]) -> int:
    if tag == "first":
        return min(steps)
    if tag == "last":
        return max(steps)
    try:
        return int(tag)
    except ValueError:
        raise InputError(f"bad step selector {tag!r}; use 'first', 'last' or an integer")


def _slice_step(data: dict[str, list], column: str, step: int) -> np.ndarray:
    values = [v for s, v in zip(data["step"], data[column]) if s == step]
    if not values:
        raise InputError(f"no rows for step {step}")
    return np.asarray(values)


def spring_positions(n: int, edges: list[tuple[int, int]], seed: int) -> dict[int, tuple[float, float]]:
    """Deterministic force-directed layout; self-loops are ignored."""
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from((i, j) for i, j in edges if i != j)
    return nx.spring_layout(g, seed=seed)


def _render_timeseries(job: FigureJob) -> None:
    data = read_trajectory(job.inputs[0])
    agents = sorted(set(data["agent"]))[: job.agents]
    steps = sorted(set(data["step"]))
    fig, axes = plt.subplots(1, 2, figsize=(11, 4))
    for column, ax, label in (("belief", axes[0], "belief"),
                              ("pressure", axes[1], "social pressure")):
        series: dict[int, list[float]] = {a: [0.0] * len(steps) for a in agents}
        index = {s: i for i, s in enumerate(steps)}
        for s, a, v in zip(data["step"], data["agent"], data[column]):
            if a in series:
                series[a][index[s]] = v
        for a in agents:
            ax.plot(steps, series[a], linewidth=0.8, alpha=0.7)
        ax.set_xlabel("step")
        ax.set_ylabel(label)
    fig.suptitle(f"evolution over time, first {len(agents)} agents")
    fig.tight_layout()
    fig.savefig(job.out)
    plt.close(fig)


def _render_histogram(job: FigureJob) -> None:
    data = read_trajectory(job.inputs[0])
    if job.column not in ("belief", "pressure"):
        raise InputError(f"histogram column must be belief or pressure, got {job.column!r}")
    steps = sorted(set(data["step"]))
    chosen = [_resolve_step(tag, steps) for tag in job.steps]
    fig, axes = plt.subplots(1, len(chosen), figsize=(5 * len(chosen), 4), squeeze=False)
    for ax, step in zip(axes[0], chosen):
        values = _slice_step(data, job.column, step)
        hist = compute_histogram(values, job.bins)
        ax.bar([edge for edge, _ in hist], [cnt for _, cnt in hist],
               width=1.0 / job.bins, align="edge", edgecolor="white")
        ax.set_xlabel(job.column)
        ax.set_ylabel("agents")
        ax.set_title(f"step {step}")
    fig.tight_layout()
    fig.savefig(job.out)
    plt.close(fig)


def _render_sweep_curve(job: FigureJob) -> None:
    curves = aggregate_sweep(read_sweep(job.inputs[0]))
    fig, ax = plt.subplots(figsize=(6, 4))
    for c, (values, means) in curves.items():
        ax.plot(values, means, marker="o", label=f"c = {c:g}")
    ax.set_xlabel("parameter value")
    ax.set_ylabel("final belief std (seed mean)")
    ax.legend()
    fig.tight_layout()
    fig.savefig(job.out)
    plt.close(fig)


def _render_network_snapshot(job: FigureJob) -> None:
    if len(job.inputs) < 3:
        raise InputError(
            "network_snapshot needs three inputs: nodes.csv edges.csv trajectory.csv"
        )
    nodes = read_nodes(job.inputs[0])
    edges = read_edges(job.inputs[1])
    data = read_trajectory(job.inputs[2])
    n = len(nodes["agent"])
    pos = spring_positions(n, list(zip(edges["src"], edges["dst"])), job.layout_seed)
    xy = np.array([pos[a] for a in nodes["agent"]])
    if job.color_by_group:
        colors = [GROUP_COLORS[g] for g in nodes["group"]]
    else:
        colors = ["tab:gray"] * n
    steps = sorted(set(data["step"]))
    lo, hi = NODE_SIZE_RANGE

    fig, axes = plt.subplots(1, 2, figsize=(11, 5))
    for ax, tag in zip(axes, ("first", "last")):
        step = _resolve_step(tag, steps)
        beliefs = _slice_step(data, "belief", step)
        if beliefs.size != n:
            raise InputError(f"{job.inputs[2]}: step {step} has {beliefs.size} agents, "
                             f"nodes.csv has {n}")
        for i, j in zip(edges["src"], edges["dst"]):
            if i != j:
                ax.plot([xy[i, 0], xy[j, 0]], [xy[i, 1], xy[j, 1]],
                        color="0.85", linewidth=0.4, zorder=1)
        ax.scatter(xy[:, 0], xy[:, 1], s=lo + beliefs * (hi - lo), c=colors,
                   zorder=2, edgecolors="none", alpha=0.85)
        ax.set_title(f"beliefs at step {step}")
        ax.set_axis_off()
    fig.tight_layout()
    fig.savefig(job.out)
    plt.close(fig)


_RENDERERS = {
    "timeseries": _render_timeseries,
    "histogram": _render_histogram,
    "sweep_curve": _render_sweep_curve,
    "network_snapshot": _render_network_snapshot,
}


def render(job: FigureJob) -> Path:
    """Render one figure job; output format follows the file extension (png/svg)."""
    if job.kind not in _RENDERERS:
        raise InputError(f"unknown figure kind {job.kind!r}; expected one of {KINDS}")
    if not job.inputs:
        raise InputError("at least one input file is required")
    job.out.parent.mkdir(parents=True, exist_ok=True)
    _RENDERERS[job.kind](job)
    return job.out


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="beliefnet-figures", description="Render beliefnet outputs into figures"
    )
    parser.add_argument("--kind", required=True, choices=KINDS)
    parser.add_argument("--input", required=True, nargs="+", type=Path,
                        help="input file(s); network_snapshot takes nodes.csv "
                             "edges.csv trajectory.csv")
    parser.add_argument("--out", required=True, type=Path, help="output image (.png or .svg)")
    parser.add_argument("--agents", type=int, default=40)
    parser.add_argument("--bins", type=int, default=10)
    parser.add_argument("--column", choices=["belief", "pressure"], default="belief")
    parser.add_argument("--steps", default="first,last",
                        help="comma list of steps for histograms ('first', 'last' or integers)")
    parser.add_argument("--layout-seed", type=int, default=7)
    parser.add_argument("--no-group-colors", action="store_true")
    args = parser.parse_args(argv)

    job = FigureJob(
        kind=args.kind,
        inputs=list(args.input),
        out=args.out,
        agents=args.agents,
        bins=args.bins,
        color_by_group=not args.no_group_colors,
        layout_seed=args.layout_seed,
        column=args.column,
        steps=[part for part in args.steps.split(",") if part],
    )
    try:
        render(job)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
