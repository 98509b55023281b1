"""Co-evolution engine: 3WD-filtered averaging, term mapback, rewiring.

One iteration is fully synchronous: every agent filters its current
neighbors through the three-way rule and averages the accepted opinions,
all reading the pre-step state; each averaged opinion is then mapped to the
nearest linguistic term, whose value becomes the agent's state; finally the
network rewires using the pre-step opinions. RNG consumption order is fixed
for reproducibility: all filtering draws (agents ascending, neighbors
ascending), then all rewiring draws (pairs in lexicographic order).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import metrics as metrics_mod
from .config import SimulationConfig, config_from_dict
from .linguistic import LinguisticTermSet, nearest_term
from .network import RewiringParams, SocialNetwork, rewire, stats
from .threeway import ThreeWayThresholds, classify_neighbor


@dataclass
class StepCounters:
    """Instrumentation for the per-step pair-visit complexity contract.

    ``filter_visits`` counts connected ordered pairs examined during
    neighbor filtering (at most N*(N-1) per step); ``rewire_visits`` counts
    unordered pairs examined during rewiring (exactly N*(N-1)/2 per step).
    Each stays below N^2 per step.
    """

    filter_visits: int = 0
    rewire_visits: int = 0


@dataclass(frozen=True)
class StepResult:
    values: np.ndarray
    terms: np.ndarray
    network: SocialNetwork
    delta_max: float


@dataclass(frozen=True)
class TrajectoryRecord:
    """Everything one run produced, iteration 0 (the initial state) included."""

    values: np.ndarray        # (iterations+1, n_agents) numeric opinions
    terms: np.ndarray         # (iterations+1, n_agents) term indices
    networks: list[SocialNetwork]
    variance: np.ndarray
    opinion_range: np.ndarray
    consensus: np.ndarray
    avg_degree: np.ndarray
    isolated: np.ndarray
    delta_max: np.ndarray     # NaN at iteration 0 (no preceding state)
    converged: bool
    iterations: int
    d_max: float

    @property
    def n_agents(self) -> int:
        return self.values.shape[1]

    @property
    def final_values(self) -> np.ndarray:
        return self.values[-1]

    @classmethod
    def from_states(cls, values_hist, terms_hist, networks, converged: bool,
                    d_max: float = 0.5) -> "TrajectoryRecord":
        values = np.asarray(values_hist, dtype=float)
        terms = np.asarray(terms_hist, dtype=int)
        n_iter = values.shape[0]
        var = np.array([metrics_mod.variance(values[k]) for k in range(n_iter)])
        rng_ = np.array([metrics_mod.opinion_range(values[k]) for k in range(n_iter)])
        cons = np.array([metrics_mod.consensus_index(values[k], d_max) for k in range(n_iter)])
        net_stats = [stats(net) for net in networks]
        avg_deg = np.array([s.average_degree for s in net_stats])
        isolated = np.array([s.isolated_count for s in net_stats], dtype=int)
        dmax = np.full(n_iter, np.nan)
        for k in range(1, n_iter):
            dmax[k] = metrics_mod.delta_max(values[k - 1], values[k])
        return cls(
            values=values, terms=terms, networks=list(networks),
            variance=var, opinion_range=rng_, consensus=cons,
            avg_degree=avg_deg, isolated=isolated, delta_max=dmax,
            converged=converged, iterations=n_iter - 1, d_max=d_max,
        )


def filter_neighbors(
    agent: int,
    opinions: np.ndarray,
    net: SocialNetwork,
    thresholds: ThreeWayThresholds,
    rng: np.random.Generator,
    counters: StepCounters | None = None,
) -> np.ndarray:
    """Indices of the agent's accepted neighbors, in ascending order.

    Only connected peers are candidates (never the agent itself); each is
    classified by the three-way rule, so uniform draws happen exactly for
    hesitation-zone neighbors, in ascending index order.
    """
    neighbors = np.flatnonzero(net.adjacency[agent])
    if counters is not None:
        counters.filter_visits += int(neighbors.size)
    own = opinions[agent]
    accepted = [
        int(j) for j in neighbors
        if classify_neighbor(abs(own - opinions[j]), thresholds, rng)
    ]
    return np.array(accepted, dtype=int)


def update_value(current: float, accepted, opinions: np.ndarray, inertia: float) -> float:
    """Averaging update for one agent.

    With no accepted neighbors the opinion is unchanged. Otherwise the new
    value is inertia*current + (1-inertia)*mean(accepted opinions); the
    agent's own opinion enters only through inertia. Guards keep the result
    exact when all accepted opinions coincide, so full consensus is a true
    fixed point in floating point.
    """
    if not 0.0 <= inertia <= 1.0:
        raise ValueError(f"inertia must lie in [0, 1], got {inertia!r}")
    accepted = np.asarray(accepted, dtype=int)
    if accepted.size == 0:
        return float(current)
    vals = opinions[accepted]
    lo, hi = vals.min(), vals.max()
    mean = float(lo) if lo == hi else float(vals.mean())
    if inertia == 0.0:
        return mean
    if mean == current:
        return float(current)
    return float(inertia * current + (1.0 - inertia) * mean)


def step(
    opinions: np.ndarray,
    net: SocialNetwork,
    term_set: LinguisticTermSet,
    thresholds: ThreeWayThresholds,
    inertia: float,
    rewiring: RewiringParams,
    rng: np.random.Generator,
    counters: StepCounters | None = None,
) -> StepResult:
    """One synchronous iteration; returns the next state and its largest change."""
    n = net.size
    opinions = np.asarray(opinions, dtype=float)
    if opinions.shape != (n,):
        raise ValueError(f"expected {n} opinions, got shape {opinions.shape}")
    new_values = np.empty(n)
    new_terms = np.empty(n, dtype=int)
    for i in range(n):
        accepted = filter_neighbors(i, opinions, net, thresholds, rng, counters)
        if accepted.size == 0:
            # literal no-update: the opinion is carried over untouched
            new_values[i] = opinions[i]
            new_terms[i] = nearest_term(term_set, opinions[i])
            continue
        averaged = update_value(opinions[i], accepted, opinions, inertia)
        # The averaged opinion is mapped back to the nearest linguistic term
        # and the term's value becomes the carried state, so opinions always
        # sit on the term scale (matching the reported term-valued metrics).
        term = nearest_term(term_set, averaged)
        new_terms[i] = term
        new_values[i] = term_set.values[term]
    new_net = rewire(net, opinions, rewiring, rng, counters)
    return StepResult(
        values=new_values,
        terms=new_terms,
        network=new_net,
        delta_max=metrics_mod.delta_max(opinions, new_values),
    )


def run(config: SimulationConfig) -> TrajectoryRecord:
    """Run the co-evolution model to convergence or t_max steps.

    The generator is seeded from config.seed; the run stops as soon as a
    step's delta_max falls below config.epsilon. Identical configs give
    bit-identical records.
    """
    config_from_dict(config.to_dict())  # reject invalid configs before any computation
    term_set = config.term_set()
    rng = np.random.default_rng(config.seed)
    net = config.build_initial_network(rng)
    values = config.initial_values(term_set)
    terms = np.asarray(config.initial_opinions, dtype=int)

    values_hist = [values]
    terms_hist = [terms]
    networks = [net]
    converged = False
    for _ in range(config.t_max):
        result = step(values, net, term_set, config.thresholds,
                      config.inertia, config.rewiring, rng)
        values, net = result.values, result.network
        values_hist.append(result.values)
        terms_hist.append(result.terms)
        networks.append(net)
        if result.delta_max < config.epsilon:
            converged = True
            break
    return TrajectoryRecord.from_states(values_hist, terms_hist, networks,
                                        converged, config.d_max)
