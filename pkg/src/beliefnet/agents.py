"""Agent state: structures of understanding, confidence levels, self-reasoning.

The evidence pool for a statement has 2m slots: slot j in [0, m) is a positive
evidence item and slot j+m is its negation, so (j, j+m) form an opposite pair.
An agent's structure of understanding is a row of weights over the 2m slots
that sums to 1 and activates exactly one member of every pair. Confidence is
the agent's certainty in [0, 1] that each slot's statement is true.
"""

from __future__ import annotations

import numpy as np

from .config import ConfigError
from .rng import substream


def init_understanding(n: int, m: int, polarization_index: float, seed: int) -> np.ndarray:
    """Random structures of understanding, one row per agent.

    For every pair the positive slot is chosen active with probability
    `polarization_index` (0.5 reproduces the fully random initialization,
    higher values lean the population toward the positive evidence). Active
    slots get independent uniform weights, then each row is normalized to 1.
    """
    if not 0.0 <= polarization_index <= 1.0:
        raise ConfigError(
            f"polarization_index must lie in [0, 1], got {polarization_index}",
            "polarization_index",
        )
    rng = substream(seed, "understanding")
    lean_positive = rng.random((n, m)) < polarization_index
    # 1 - random() lies in (0, 1]: active weights stay strictly positive
    weights = 1.0 - rng.random((n, m))
    u = np.zeros((n, 2 * m))
    pos = np.where(lean_positive, weights, 0.0)
    neg = np.where(lean_positive, 0.0, weights)
    u[:, :m] = pos
    u[:, m:] = neg
    u /= u.sum(axis=1, keepdims=True)
    return u


def init_confidence_random(n: int, m: int, seed: int) -> np.ndarray:
    """Independent uniform(0, 1) confidence on every slot of every agent."""
    rng = substream(seed, "confidence")
    return rng.random((n, 2 * m))


def init_confidence_polarized(n: int, m: int, a: float, groups: np.ndarray) -> np.ndarray:
    """Group-polarized confidence.

    Agents in group 1 get confidence `a` on the positive slots and 1-a on the
    negations; group 0 gets the mirror image. For any `a` the result satisfies
    the complement identity b[j+m] = 1 - b[j].
    """
    if not 0.0 <= a <= 1.0:
        raise ConfigError(f"a must lie in [0, 1], got {a}", "a")
    groups = np.asarray(groups)
    if groups.shape != (n,):
        raise ConfigError(f"groups must have exactly {n} entries, got shape {groups.shape}")
    if not np.isin(groups, (0, 1)).all():
        raise ConfigError("groups must contain only 0/1 labels")
    b = np.empty((n, 2 * m))
    one = groups == 1
    b[one, :m] = a
    b[one, m:] = 1.0 - a
    b[~one, :m] = 1.0 - a
    b[~one, m:] = a
    return b


def random_half_groups(n: int, seed: int) -> np.ndarray:
    """Assign half the population (rounded down) to group 1, uniformly at random."""
    rng = substream(seed, "groups")
    perm = rng.permutation(n)
    groups = np.zeros(n, dtype=np.int64)
    groups[perm[: n // 2]] = 1
    return groups


def self_reasoning(b_row: np.ndarray, u_row: np.ndarray) -> float:
    """Evidence-weighted belief component: sum_i b_i * u_i.

    A convex combination of confidences, so the result lies between the
    smallest and largest confidence on the active slots.
    """
    b_row = np.asarray(b_row, dtype=float)
    u_row = np.asarray(u_row, dtype=float)
    if b_row.shape != u_row.shape:
        raise ValueError(
            f"confidence and understanding rows differ in length: {b_row.shape} vs {u_row.shape}"
        )
    return float(np.dot(b_row, u_row))


def check_understanding(u: np.ndarray, m: int, tol: float = 1e-12) -> None:
    """Assert the structural invariants of an understanding matrix."""
    if u.shape[1] != 2 * m:
        raise ValueError(f"expected {2 * m} columns, got {u.shape[1]}")
    if np.max(np.abs(u.sum(axis=1) - 1.0)) > tol:
        raise ValueError("understanding rows must sum to 1")
    pos_active = u[:, :m] > 0
    neg_active = u[:, m:] > 0
    if not np.all(pos_active ^ neg_active):
        raise ValueError("exactly one slot per opposite pair must be active")
