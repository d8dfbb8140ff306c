"""Figure rendering for beliefnet simulation outputs."""

from .io import InputError, read_edges, read_nodes, read_sweep, read_trajectory
from .render import FigureJob, KINDS, aggregate_sweep, compute_histogram, render

__all__ = [
    "FigureJob",
    "InputError",
    "KINDS",
    "aggregate_sweep",
    "compute_histogram",
    "read_edges",
    "read_nodes",
    "read_sweep",
    "read_trajectory",
    "render",
]
