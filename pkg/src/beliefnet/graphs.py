"""Social network generation and doubly stochastic normalization.

Two generators are provided: a plain Erdős–Rényi graph (edge probability
k/n, so k is the target mean degree) and a two-community variant made of two
ER blocks joined by sparse random bridges. The adjacency of either graph is
scaled into a symmetric doubly stochastic weight matrix by a symmetric
Sinkhorn-Knopp iteration.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components as _cc

from .config import ConfigError
from .rng import substream


class NotScalableError(RuntimeError):
    """The adjacency admits no doubly stochastic scaling (no total support)."""


@dataclass(eq=False)
class Graph:
    """Undirected simple graph with a binary community label per node.

    `edges` is an (E, 2) integer array with src < dst, lexicographically
    sorted; `group` holds 0/1 labels (all zero for single-population graphs).
    """

    n: int
    edges: np.ndarray
    group: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.group is None:
            self.group = np.zeros(self.n, dtype=np.int64)
        self.edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)

    def degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        if self.edges.size:
            np.add.at(deg, self.edges[:, 0], 1)
            np.add.at(deg, self.edges[:, 1], 1)
        return deg

    def adjacency(self, add_self_loops: bool = False) -> sp.csr_matrix:
        """Binary adjacency as CSR, optionally with unit diagonal."""
        e = self.edges
        rows = np.concatenate([e[:, 0], e[:, 1]])
        cols = np.concatenate([e[:, 1], e[:, 0]])
        data = np.ones(rows.size)
        a = sp.coo_matrix((data, (rows, cols)), shape=(self.n, self.n))
        if add_self_loops:
            a = a + sp.eye(self.n, format="coo")
        return a.tocsr()


@dataclass(eq=False)
class WeightMatrix:
    """Symmetric doubly stochastic influence weights, stored sparse."""

    n: int
    matrix: sp.csr_matrix

    def entries(self) -> dict[tuple[int, int], float]:
        """All stored (i, j) -> w_ij pairs, both orientations included."""
        coo = self.matrix.tocoo()
        return {(int(i), int(j)): float(w) for i, j, w in zip(coo.row, coo.col, coo.data)}

    def row_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=1)).ravel()

    def col_sums(self) -> np.ndarray:
        return np.asarray(self.matrix.sum(axis=0)).ravel()

    def diagonal(self) -> np.ndarray:
        return self.matrix.diagonal()


def _edge_array(src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    edges = np.column_stack([src, dst]).astype(np.int64)
    order = np.lexsort((edges[:, 1], edges[:, 0]))
    return edges[order]


def generate_er(n: int, k: float, seed: int) -> Graph:
    """Erdős–Rényi graph: each unordered pair is an edge with probability k/n.

    Deterministic in (n, k, seed); all group labels are 0.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1:
        raise ConfigError(f"n must be a positive integer, got {n!r}", "n")
    if not 0 <= k < n:
        raise ConfigError(f"k must satisfy 0 <= k < n, got k={k}", "k")
    rng = substream(seed, "graph")
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < (k / n)
    return Graph(n=n, edges=_edge_array(iu[keep], ju[keep]))


def generate_two_community(n: int, k_in: float, k_out: float, seed: int) -> Graph:
    """Two equal ER communities plus sparse random bridges.

    Nodes [0, n/2) carry group 0, the rest group 1. Intra-community pairs are
    wired with probability k_in/(n/2), inter-community pairs with k_out/n.
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1 or n % 2 != 0:
        raise ConfigError(f"n must be a positive even integer, got {n!r}", "n")
    half = n // 2
    if not 0 < k_in < half:
        raise ConfigError(f"k_in must satisfy 0 < k_in < n/2, got k_in={k_in}", "k_in")
    if not 0 <= k_out < n:
        raise ConfigError(f"k_out must satisfy 0 <= k_out < n, got k_out={k_out}", "k_out")
    rng = substream(seed, "graph")
    p_in = k_in / half
    p_out = k_out / n

    # Draw order is fixed (block 0, block 1, bridges) to keep runs reproducible.
    iu, ju = np.triu_indices(half, 1)
    keep0 = rng.random(iu.size) < p_in
    keep1 = rng.random(iu.size) < p_in
    cross = rng.random((half, half)) < p_out
    ci, cj = np.nonzero(cross)

    src = np.concatenate([iu[keep0], iu[keep1] + half, ci])
    dst = np.concatenate([ju[keep0], ju[keep1] + half, cj + half])
    group = np.concatenate([np.zeros(half, dtype=np.int64), np.ones(half, dtype=np.int64)])
    return Graph(n=n, edges=_edge_array(src, dst), group=group)


def connected_components(g: Graph) -> list[list[int]]:
    """Partition of [0, n) into connected node sets.

    Each component is sorted ascending; components are ordered by descending
    size, ties broken by the smallest member.
    """
    ncomp, labels = _cc(g.adjacency(), directed=False)
    comps: list[list[int]] = [[] for _ in range(ncomp)]
    for node, lab in enumerate(labels):
        comps[lab].append(node)
    comps.sort(key=lambda nodes: (-len(nodes), nodes[0]))
    return comps


def giant_component_fraction(g: Graph) -> float:
    """Fraction of nodes inside the largest connected component."""
    if g.n < 1:
        raise ConfigError(f"graph must have at least one node, got n={g.n}", "n")
    return len(connected_components(g)[0]) / g.n


def sinkhorn_normalize(
    g: Graph,
    add_self_loops: bool = True,
    tol: float = 1e-9,
    max_iter: int = 1000,
) -> WeightMatrix:
    """Scale the binary adjacency into a symmetric doubly stochastic matrix.

    Isolated nodes (no edge and no self-loop) receive the single entry
    w_ii = 1 and are excluded from the scaling, so they hold their own state.
    The remaining submatrix is scaled as D A D with d updated by
    d <- d / sqrt(row_sums) until every row/column sum is within `tol` of 1.

    Raises NotScalableError if no doubly stochastic scaling exists, e.g. a
    path on three nodes without self-loops.
    """
    if g.n < 1:
        raise ConfigError(f"graph must have at least one node, got n={g.n}", "n")
    a = g.adjacency(add_self_loops=add_self_loops)
    deg = np.asarray(a.sum(axis=1)).ravel()
    active = deg > 0
    idx = np.nonzero(active)[0]

    rows: list[np.ndarray] = []
    cols: list[np.ndarray] = []
    data: list[np.ndarray] = []

    if idx.size:
        sub = a[idx][:, idx].tocsr()
        d = np.ones(idx.size)
        converged = False
        for _ in range(max_iter):
            s = sub @ d
            r = d * s  # row sums of the scaled matrix D A D
            if np.max(np.abs(r - 1.0)) <= tol:
                converged = True
                break
            d = d / np.sqrt(r)
        if not converged:
            raise NotScalableError(
                f"graph with {g.n} nodes and {len(g.edges)} edges has no doubly "
                f"stochastic scaling (no convergence after {max_iter} iterations); "
                "its adjacency lacks total support"
            )
        coo = sub.tocoo()
        rows.append(idx[coo.row])
        cols.append(idx[coo.col])
        # d[i]*d[j] is computed identically for both orientations: exact symmetry
        data.append(d[coo.row] * d[coo.col])

    isolated = np.nonzero(~active)[0]
    if isolated.size:
        rows.append(isolated)
        cols.append(isolated)
        data.append(np.ones(isolated.size))

    w = sp.coo_matrix(
        (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
        shape=(g.n, g.n),
    ).tocsr()
    return WeightMatrix(n=g.n, matrix=w)
