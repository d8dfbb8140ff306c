"""Synchronous belief and evidence-confidence dynamics.

One step of the coupled system, for every agent p at once:

1. Evidence propagation. For each opposite pair (k, l = k+m), every neighbor
   i of p transmits the member it holds active. A neighbor active on k sends
   b_k(i) toward the receiver's k slot and the complement 1 - b_k(i) toward
   the l slot (the backfire mechanism for opposite evidence), and
   symmetrically for neighbors active on l. The receiver keeps its own value
   with whatever weight its participating neighbors leave over:

       b'_k(p) = (1 - sum_i w_ip) * b_k(p) + sum_i w_ip * v_i

   Self-loop weight is excluded from the neighbor set, so it is part of the
   retained share. Pairs on which the receiver has no active slot are left
   untouched, and neighbors with no active slot in a pair contribute their
   weight back to the retained share.

2. Belief update. Self-reasoning S'(p) is the new confidence row dotted with
   the understanding row; the belief mixes it with the influence-weighted
   social norm over the previous beliefs:

       X'(p) = c(p) * S'(p) + (1 - c(p)) * sum_k w_kp * X(k)

   where the sum runs over neighbors and the self-loop. Social pressure is
   P'(p) = |X'(p) - S'(p)|.

All updates read the pre-step snapshot only, so agents could be processed in
any order; one simulation run is sequential and owns its state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .graphs import WeightMatrix


@dataclass(eq=False)
class SimState:
    """Snapshot of one time step: confidence, beliefs, self-reasoning, pressure."""

    step: int
    confidence: np.ndarray      # (n, 2m)
    beliefs: np.ndarray         # (n,)
    self_reasoning: np.ndarray  # (n,)
    pressure: np.ndarray        # (n,)


def _as_conf_vector(self_conf: float | np.ndarray, n: int) -> np.ndarray:
    c = np.asarray(self_conf, dtype=float)
    if c.ndim == 0:
        c = np.full(n, float(c))
    if c.shape != (n,):
        raise ValueError(f"self-confidence must be scalar or length {n}, got shape {c.shape}")
    return c


def _check_dims(weights: WeightMatrix, understanding: np.ndarray, confidence: np.ndarray) -> None:
    n = weights.n
    if understanding.shape != confidence.shape:
        raise ValueError(
            f"understanding {understanding.shape} and confidence {confidence.shape} disagree"
        )
    if understanding.shape[0] != n or understanding.shape[1] % 2 != 0:
        raise ValueError(f"expected ({n}, 2m) agent matrices, got {understanding.shape}")


def initial_state(
    weights: WeightMatrix,
    understanding: np.ndarray,
    confidence0: np.ndarray,
    self_conf: float | np.ndarray,
) -> SimState:
    """Step-0 state: beliefs equal self-reasoning, social pressure exactly 0."""
    _check_dims(weights, understanding, confidence0)
    _as_conf_vector(self_conf, weights.n)
    s = np.clip(np.einsum("ij,ij->i", confidence0, understanding), 0.0, 1.0)
    return SimState(
        step=0,
        confidence=confidence0.copy(),
        beliefs=s.copy(),
        self_reasoning=s,
        pressure=np.zeros(weights.n),
    )


def step_evidence(
    state: SimState, weights: WeightMatrix, understanding: np.ndarray
) -> np.ndarray:
    """Propagate evidence confidence one synchronous step; returns the new matrix."""
    b = state.confidence
    u = understanding
    _check_dims(weights, u, b)
    m = u.shape[1] // 2

    w = weights.matrix
    qt = (w - sp.diags(w.diagonal())).T.tocsr()  # qt[p, i] = w_ip, self-loops removed

    new_b = b.copy()
    for j in range(m):
        k, l = j, j + m
        active_k = u[:, k] > 0
        active_l = u[:, l] > 0
        mask = active_k | active_l
        if not mask.any():
            continue
        # value each sender contributes toward the k slot; l gets the complement
        v_k = np.where(active_k, b[:, k], 1.0 - b[:, l])
        v_k = np.where(mask, v_k, 0.0)
        wsum = qt @ mask.astype(float)
        recv_k = qt @ v_k
        bk = (1.0 - wsum) * b[:, k] + recv_k
        bl = (1.0 - wsum) * b[:, l] + (wsum - recv_k)
        new_b[:, k] = np.where(mask, bk, b[:, k])
        new_b[:, l] = np.where(mask, bl, b[:, l])
    np.clip(new_b, 0.0, 1.0, out=new_b)
    return new_b


def step_beliefs(
    state: SimState,
    new_confidence: np.ndarray,
    weights: WeightMatrix,
    understanding: np.ndarray,
    self_conf: float | np.ndarray,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Belief, self-reasoning and pressure after one step.

    Self-reasoning uses the freshly propagated confidence; the social norm
    uses the previous step's beliefs. Isolated agents carry only their
    self-loop weight, so their social norm is their own previous belief.
    """
    _check_dims(weights, understanding, new_confidence)
    c = _as_conf_vector(self_conf, weights.n)
    s = np.clip(np.einsum("ij,ij->i", new_confidence, understanding), 0.0, 1.0)
    social = weights.matrix.T @ state.beliefs
    x = c * s + (1.0 - c) * social
    np.clip(x, 0.0, 1.0, out=x)
    p = np.abs(x - s)
    return x, s, p


def advance(
    state: SimState,
    weights: WeightMatrix,
    understanding: np.ndarray,
    self_conf: float | np.ndarray,
) -> SimState:
    """One full synchronous step: evidence propagation, then belief update."""
    new_b = step_evidence(state, weights, understanding)
    x, s, p = step_beliefs(state, new_b, weights, understanding, self_conf)
    return SimState(
        step=state.step + 1,
        confidence=new_b,
        beliefs=x,
        self_reasoning=s,
        pressure=p,
    )


def run_simulation(
    weights: WeightMatrix,
    understanding: np.ndarray,
    confidence0: np.ndarray,
    self_conf: float | np.ndarray,
    steps: int,
) -> list[SimState]:
    """Full trajectory of length steps + 1, deterministic in its inputs."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    state = initial_state(weights, understanding, confidence0, self_conf)
    trajectory = [state]
    for _ in range(steps):
        state = advance(state, weights, understanding, self_conf)
        trajectory.append(state)
    return trajectory


def oracle_step(
    state: SimState,
    weights: WeightMatrix,
    understanding: np.ndarray,
    self_conf: float | np.ndarray,
) -> SimState:
    """Brute-force reference step, kept loop-based and independent of the
    vectorized engine so the two can be checked against each other.

    Intended for small instances only (roughly n <= 64).
    """
    n = weights.n
    b = state.confidence
    u = understanding
    two_m = u.shape[1]
    m = two_m // 2
    w = weights.matrix.toarray()
    c = _as_conf_vector(self_conf, n)

    def clamp(x: float) -> float:
        return min(1.0, max(0.0, x))

    new_b = [[float(b[p, s]) for s in range(two_m)] for p in range(n)]
    for p in range(n):
        for j in range(m):
            k, l = j, j + m
            if u[p, k] == 0.0 and u[p, l] == 0.0:
                continue  # receiver has no stake in this pair
            retained = 1.0
            acc_k = 0.0
            acc_l = 0.0
            for i in range(n):
                if i == p or w[i, p] == 0.0:
                    continue
                if u[i, k] != 0.0:
                    vk = float(b[i, k])
                    vl = 1.0 - float(b[i, k])
                elif u[i, l] != 0.0:
                    vk = 1.0 - float(b[i, l])
                    vl = float(b[i, l])
                else:
                    continue  # sender holds neither member of the pair
                retained -= w[i, p]
                acc_k += w[i, p] * vk
                acc_l += w[i, p] * vl
            new_b[p][k] = clamp(retained * float(b[p, k]) + acc_k)
            new_b[p][l] = clamp(retained * float(b[p, l]) + acc_l)

    new_x = [0.0] * n
    new_s = [0.0] * n
    new_p = [0.0] * n
    for p in range(n):
        s_val = 0.0
        for slot in range(two_m):
            s_val += new_b[p][slot] * float(u[p, slot])
        s_val = clamp(s_val)
        norm = 0.0
        for i in range(n):
            if w[i, p] != 0.0:
                norm += w[i, p] * float(state.beliefs[i])
        x_val = clamp(c[p] * s_val + (1.0 - c[p]) * norm)
        new_s[p] = s_val
        new_x[p] = x_val
        new_p[p] = abs(x_val - s_val)

    return SimState(
        step=state.step + 1,
        confidence=np.array(new_b),
        beliefs=np.array(new_x),
        self_reasoning=np.array(new_s),
        pressure=np.array(new_p),
    )
