"""Strict readers for the simulator's CSV/JSON file formats.

Every reader validates the header exactly (unknown columns are rejected) and
reports malformed rows with the file name and line number, so a bad input
fails loudly instead of producing a silently wrong figure.
"""

from __future__ import annotations

from pathlib import Path


class InputError(ValueError):
    """Malformed or missing input file; message names the file (and line)."""


TRAJECTORY_COLUMNS = ["step", "agent", "belief", "self_reasoning", "pressure"]
NODES_COLUMNS = ["agent", "group", "degree"]
EDGES_COLUMNS = ["src", "dst", "weight"]
SWEEP_COLUMNS = [
    "parameter", "value", "c", "seed", "final_std", "final_mean",
    "mean_pressure", "max_pressure",
]


def _read_rows(path: str | Path, columns: list[str]) -> list[list[str]]:
    path = Path(path)
    if not path.exists():
        raise InputError(f"{path}: file not found")
    lines = path.read_text().splitlines()
    if not lines:
        raise InputError(f"{path}: empty file")
    header = lines[0].split(",")
    if header != columns:
        raise InputError(
            f"{path}: line 1: expected columns {','.join(columns)}, got {lines[0]!r}"
        )
    rows = []
    for lineno, line in enumerate(lines[1:], start=2):
        if line == "":
            continue
        parts = line.split(",")
        if len(parts) != len(columns):
            raise InputError(
                f"{path}: line {lineno}: expected {len(columns)} fields, got {len(parts)}"
            )
        rows.append(parts)
    return rows


def _typed(path, rows, converters):
    out = [[] for _ in converters]
    for lineno, parts in enumerate(rows, start=2):
        for slot, (convert, part) in enumerate(zip(converters, parts)):
            try:
                out[slot].append(convert(part))
            except ValueError:
                raise InputError(f"{path}: line {lineno}: bad value {part!r}")
    return out


def read_trajectory(path: str | Path) -> dict[str, list]:
    rows = _read_rows(path, TRAJECTORY_COLUMNS)
    step, agent, belief, reasoning, pressure = _typed(
        path, rows, [int, int, float, float, float]
    )
    return {
        "step": step, "agent": agent, "belief": belief,
        "self_reasoning": reasoning, "pressure": pressure,
    }


def read_nodes(path: str | Path) -> dict[str, list]:
    rows = _read_rows(path, NODES_COLUMNS)
    agent, group, degree = _typed(path, rows, [int, int, int])
    return {"agent": agent, "group": group, "degree": degree}


def read_edges(path: str | Path) -> dict[str, list]:
    rows = _read_rows(path, EDGES_COLUMNS)
    src, dst, weight = _typed(path, rows, [int, int, float])
    return {"src": src, "dst": dst, "weight": weight}


def read_sweep(path: str | Path) -> dict[str, list]:
    rows = _read_rows(path, SWEEP_COLUMNS)
    parameter = [parts[0] for parts in rows]
    value, c, seed, final_std, final_mean, mean_p, max_p = _typed(
        path, [parts[1:] for parts in rows],
        [float, float, int, float, float, float, float],
    )
    return {
        "parameter": parameter, "value": value, "c": c, "seed": seed,
        "final_std": final_std, "final_mean": final_mean,
        "mean_pressure": mean_p, "max_pressure": max_p,
    }
