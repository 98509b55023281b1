"""Symmetric social networks: structural metrics, random generation, rewiring.

Networks are boolean adjacency matrices without self-loops. All operations
treat a network as an immutable snapshot; :func:`rewire` returns a new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class SocialNetwork:
    """Undirected, loop-free social network over ``size`` agents."""

    adjacency: np.ndarray

    def __post_init__(self):
        adj = self.adjacency
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError(f"adjacency must be square, got shape {adj.shape}")
        if adj.dtype != np.bool_:
            raise ValueError("adjacency must be a boolean matrix")
        if np.any(np.diag(adj)):
            raise ValueError("adjacency has self-loops")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency is not symmetric")

    @property
    def size(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edges as (i, j) with i < j, ascending pair order."""
        ii, jj = np.nonzero(np.triu(self.adjacency, k=1))
        return [(int(i), int(j)) for i, j in zip(ii, jj)]


@dataclass(frozen=True)
class RewiringParams:
    """Thresholds and probabilities for opinion-similarity rewiring."""

    delta_add: float
    delta_cut: float
    p_add: float
    p_cut: float

    def __post_init__(self):
        for name in ("delta_add", "delta_cut", "p_add", "p_cut"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v!r}")


@dataclass(frozen=True)
class NetworkStats:
    average_degree: float
    isolated_count: int
    density: float


def empty_network(n: int) -> SocialNetwork:
    if n < 1:
        raise ValueError(f"network size must be >= 1, got {n}")
    return SocialNetwork(np.zeros((n, n), dtype=bool))


def complete_network(n: int) -> SocialNetwork:
    if n < 1:
        raise ValueError(f"network size must be >= 1, got {n}")
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return SocialNetwork(adj)


def network_from_edges(n: int, edges) -> SocialNetwork:
    """Build a network from undirected (i, j) pairs."""
    adj = np.zeros((n, n), dtype=bool)
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"edge ({i}, {j}) out of range for {n} agents")
        if i == j:
            raise ValueError(f"self-loop ({i}, {j}) not allowed")
        adj[i, j] = adj[j, i] = True
    return SocialNetwork(adj)


def density(net: SocialNetwork) -> float:
    """Edges present divided by the N*(N-1)/2 possible undirected edges."""
    n = net.size
    if n < 2:
        raise ValueError("density requires at least 2 agents")
    return net.edge_count / (n * (n - 1) / 2)


def centrality(net: SocialNetwork, vertex: int) -> float:
    """Degree centrality in [0, 1].

    With a symmetric adjacency, in- and out-degree coincide, so the
    (in + out) / (2*(N-1)) definition collapses to degree / (N-1).
    """
    n = net.size
    if n < 2:
        raise ValueError("centrality requires at least 2 agents")
    if not 0 <= vertex < n:
        raise ValueError(f"vertex {vertex} out of range")
    return int(net.adjacency[vertex].sum()) / (n - 1)


def stats(net: SocialNetwork) -> NetworkStats:
    """Average degree, isolated-vertex count, and density (0 when N < 2)."""
    n = net.size
    deg = net.degrees()
    dens = density(net) if n >= 2 else 0.0
    return NetworkStats(
        average_degree=float(deg.mean()),
        isolated_count=int((deg == 0).sum()),
        density=dens,
    )


def random_network(n: int, edge_prob: float, rng: np.random.Generator) -> SocialNetwork:
    """Erdos-Renyi style random network.

    One uniform draw per unordered pair, in ascending (i, j) order; the pair
    is connected when the draw falls below ``edge_prob``.
    """
    if n < 1:
        raise ValueError(f"network size must be >= 1, got {n}")
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge_prob must lie in [0, 1], got {edge_prob!r}")
    adj = np.zeros((n, n), dtype=bool)
    for i in range(n - 1):
        for j in range(i + 1, n):
            if rng.random() < edge_prob:
                adj[i, j] = adj[j, i] = True
    return SocialNetwork(adj)


def rewire(
    net: SocialNetwork,
    opinions,
    params: RewiringParams,
    rng: np.random.Generator,
    counters=None,
) -> SocialNetwork:
    """One rewiring pass driven by pairwise opinion distances.

    Visits every unordered pair (i, j), i < j, in lexicographic order. A
    disconnected pair closer than delta_add is connected with probability
    p_add; a connected pair farther apart than delta_cut is disconnected with
    probability p_cut (strict inequalities; boundary distances do nothing).
    Exactly one uniform draw is consumed per eligible pair. All decisions
    read the pre-rewiring adjacency and the supplied opinions.
    """
    n = net.size
    opinions = np.asarray(opinions, dtype=float)
    if opinions.shape != (n,):
        raise ValueError(f"expected {n} opinions, got shape {opinions.shape}")
    if opinions.size and (opinions.min() < 0.0 or opinions.max() > 1.0):
        raise ValueError("opinions must lie in [0, 1]")

    old = net.adjacency
    new = old.copy()
    if counters is not None:
        counters.rewire_visits += n * (n - 1) // 2
    # Eligibility is a pure function of the old state, so the pair scan can be
    # vectorized; draws then happen only for eligible pairs, still in
    # lexicographic order (np.nonzero walks the upper triangle row-major).
    dist = np.abs(opinions[:, None] - opinions[None, :])
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)
    addable = upper & ~old & (dist < params.delta_add)
    cuttable = upper & old & (dist > params.delta_cut)
    for i, j in zip(*np.nonzero(addable | cuttable)):
        if addable[i, j]:
            if rng.random() < params.p_add:
                new[i, j] = new[j, i] = True
        elif rng.random() < params.p_cut:
            new[i, j] = new[j, i] = False
    return SocialNetwork(new)


# ---------------------------------------------------------------------------
# Edge-list text format: one "i j" line per undirected edge, 0-based indices,
# ascending pair order; blank lines and '#' comments are ignored on read.
# ---------------------------------------------------------------------------

def format_edge_list(net: SocialNetwork) -> str:
    return "".join(f"{i} {j}\n" for i, j in net.edges())


def parse_edge_list(text: str) -> list[tuple[int, int]]:
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'i j', got {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return edges


def save_edge_list(net: SocialNetwork, path) -> None:
    Path(path).write_text(format_edge_list(net))


def load_network(path, n: int) -> SocialNetwork:
    return network_from_edges(n, parse_edge_list(Path(path).read_text()))
