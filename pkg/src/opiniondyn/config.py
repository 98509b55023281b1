"""Run configuration: JSON schema, defaults, validation, and echo.

One config file fully determines a run. Defaults follow the worked 20-agent
scenario: phi=3, base=2, alpha=0.3, beta=0.6, lambda=10, inertia=0,
delta_add=0.15, delta_cut=0.45, p_add=p_cut=0.5, t_max=10, epsilon=1e-3.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .linguistic import LinguisticTermSet, build_term_set
from .network import RewiringParams, SocialNetwork, network_from_edges, random_network
from .threeway import ThreeWayThresholds

MODELS = (
    "threeway",
    "degroot-uniform",
    "degroot-distance",
    "hk-homogeneous",
    "hk-heterogeneous",
)

# Fallback edge probability when a config gives no initial network: matches
# the reference scenario's measured initial average degree of about 1.9 on
# 20 agents (1.9 / 19 = 0.1).
DEFAULT_EDGE_PROB = 0.1


class ConfigError(ValueError):
    """A config schema or constraint violation, carrying the field path."""

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"config error at '{path}': {reason}")


@dataclass(frozen=True)
class InitialNetworkSpec:
    """Either an explicit edge list or random-generation parameters.

    When ``seed`` is omitted for a random network, edges are drawn from the
    run generator before the first step.
    """

    edges: tuple[tuple[int, int], ...] | None = None
    edge_prob: float | None = None
    seed: int | None = None


@dataclass(frozen=True)
class SimulationConfig:
    n_agents: int
    initial_opinions: tuple[int, ...]
    phi: int = 3
    base: float = 2.0
    thresholds: ThreeWayThresholds = field(
        default_factory=lambda: ThreeWayThresholds(alpha=0.3, beta=0.6, decay=10.0)
    )
    inertia: float = 0.0
    rewiring: RewiringParams = field(
        default_factory=lambda: RewiringParams(delta_add=0.15, delta_cut=0.45, p_add=0.5, p_cut=0.5)
    )
    t_max: int = 10
    epsilon: float = 1e-3
    seed: int = 0
    initial_network: InitialNetworkSpec = field(
        default_factory=lambda: InitialNetworkSpec(edge_prob=DEFAULT_EDGE_PROB)
    )
    model: str = "threeway"
    d_max: float = 0.5
    cluster_tolerance: float | None = None
    hk_epsilon: float | None = None
    hk_epsilons: tuple[float, ...] | None = None
    degroot_freeze_weights: bool = False

    def term_set(self) -> LinguisticTermSet:
        return build_term_set(self.phi, self.base)

    def initial_values(self, term_set: LinguisticTermSet | None = None) -> np.ndarray:
        ts = term_set if term_set is not None else self.term_set()
        return ts.values[np.asarray(self.initial_opinions, dtype=int)].copy()

    def build_initial_network(self, rng: np.random.Generator) -> SocialNetwork:
        spec = self.initial_network
        if spec.edges is not None:
            return network_from_edges(self.n_agents, spec.edges)
        gen = np.random.default_rng(spec.seed) if spec.seed is not None else rng
        return random_network(self.n_agents, spec.edge_prob, gen)

    def hk_bounds(self) -> np.ndarray:
        if self.model == "hk-homogeneous":
            return np.full(self.n_agents, float(self.hk_epsilon))
        return np.asarray(self.hk_epsilons, dtype=float)

    def to_dict(self) -> dict:
        """Fully resolved echo; re-loading it reproduces the run exactly."""
        net: dict = {}
        if self.initial_network.edges is not None:
            net["edges"] = [list(e) for e in self.initial_network.edges]
        else:
            net["edge_prob"] = self.initial_network.edge_prob
            if self.initial_network.seed is not None:
                net["seed"] = self.initial_network.seed
        out = {
            "n_agents": self.n_agents,
            "initial_opinions": list(self.initial_opinions),
            "term_set": {"phi": self.phi, "base": self.base},
            "thresholds": {
                "alpha": self.thresholds.alpha,
                "beta": self.thresholds.beta,
                "lambda": self.thresholds.decay,
            },
            "inertia": self.inertia,
            "rewiring": {
                "delta_add": self.rewiring.delta_add,
                "delta_cut": self.rewiring.delta_cut,
                "p_add": self.rewiring.p_add,
                "p_cut": self.rewiring.p_cut,
            },
            "t_max": self.t_max,
            "epsilon": self.epsilon,
            "seed": self.seed,
            "initial_network": net,
            "model": self.model,
            "d_max": self.d_max,
        }
        if self.cluster_tolerance is not None:
            out["cluster_tolerance"] = self.cluster_tolerance
        hk = {}
        if self.hk_epsilon is not None:
            hk["epsilon"] = self.hk_epsilon
        if self.hk_epsilons is not None:
            hk["epsilons"] = list(self.hk_epsilons)
        if hk:
            out["hk"] = hk
        if self.degroot_freeze_weights:
            out["degroot"] = {"freeze_weights": True}
        return out


# ---------------------------------------------------------------------------
# Parsing and validation
# ---------------------------------------------------------------------------

_TOP_LEVEL_KEYS = {
    "n_agents", "initial_opinions", "term_set", "thresholds", "inertia",
    "rewiring", "t_max", "epsilon", "seed", "initial_network", "model",
    "d_max", "cluster_tolerance", "hk", "degroot",
}


def _require(cond: bool, path: str, reason: str):
    if not cond:
        raise ConfigError(path, reason)


def _get_number(d: dict, key: str, path: str, default=None):
    if key not in d:
        if default is None:
            raise ConfigError(f"{path}.{key}", "required field is missing")
        return default
    v = d[key]
    _require(isinstance(v, (int, float)) and not isinstance(v, bool),
             f"{path}.{key}", f"expected a number, got {type(v).__name__}")
    return v


def _get_int(d: dict, key: str, path: str, default=None):
    v = _get_number(d, key, path, default)
    _require(float(v).is_integer(), f"{path}.{key}", f"expected an integer, got {v!r}")
    return int(v)


def config_from_dict(raw: dict) -> SimulationConfig:
    """Parse and fully validate a config mapping, applying defaults."""
    _require(isinstance(raw, dict), "<root>", "config must be a JSON object")
    for key in raw:
        _require(key in _TOP_LEVEL_KEYS, key, "unknown field")

    n_agents = _get_int(raw, "n_agents", "<root>")
    _require(n_agents >= 1, "n_agents", f"must be >= 1, got {n_agents}")

    ts_raw = raw.get("term_set", {})
    _require(isinstance(ts_raw, dict), "term_set", "expected an object")
    phi = _get_int(ts_raw, "phi", "term_set", default=3)
    base = float(_get_number(ts_raw, "base", "term_set", default=2.0))
    try:
        term_set = build_term_set(phi, base)
    except ValueError as exc:
        raise ConfigError("term_set", str(exc)) from exc

    _require("initial_opinions" in raw, "initial_opinions", "required field is missing")
    opinions_raw = raw["initial_opinions"]
    _require(isinstance(opinions_raw, list), "initial_opinions", "expected a list of term indices")
    _require(
        len(opinions_raw) == n_agents,
        "initial_opinions",
        f"length {len(opinions_raw)} does not match n_agents = {n_agents}",
    )
    opinions = []
    for k, v in enumerate(opinions_raw):
        _require(isinstance(v, int) and not isinstance(v, bool),
                 f"initial_opinions[{k}]", f"expected an integer term index, got {v!r}")
        _require(0 <= v <= 2 * phi,
                 f"initial_opinions[{k}]", f"term index {v} outside [0, {2 * phi}]")
        opinions.append(v)

    th_raw = raw.get("thresholds", {})
    _require(isinstance(th_raw, dict), "thresholds", "expected an object")
    try:
        thresholds = ThreeWayThresholds(
            alpha=float(_get_number(th_raw, "alpha", "thresholds", default=0.3)),
            beta=float(_get_number(th_raw, "beta", "thresholds", default=0.6)),
            decay=float(_get_number(th_raw, "lambda", "thresholds", default=10.0)),
        )
    except ValueError as exc:
        raise ConfigError("thresholds", str(exc)) from exc

    inertia = float(_get_number(raw, "inertia", "<root>", default=0.0))
    _require(0.0 <= inertia <= 1.0, "inertia", f"must lie in [0, 1], got {inertia}")

    rw_raw = raw.get("rewiring", {})
    _require(isinstance(rw_raw, dict), "rewiring", "expected an object")
    try:
        rewiring = RewiringParams(
            delta_add=float(_get_number(rw_raw, "delta_add", "rewiring", default=0.15)),
            delta_cut=float(_get_number(rw_raw, "delta_cut", "rewiring", default=0.45)),
            p_add=float(_get_number(rw_raw, "p_add", "rewiring", default=0.5)),
            p_cut=float(_get_number(rw_raw, "p_cut", "rewiring", default=0.5)),
        )
    except ValueError as exc:
        raise ConfigError("rewiring", str(exc)) from exc

    t_max = _get_int(raw, "t_max", "<root>", default=10)
    _require(t_max >= 1, "t_max", f"must be >= 1, got {t_max}")
    epsilon = float(_get_number(raw, "epsilon", "<root>", default=1e-3))
    _require(epsilon > 0.0, "epsilon", f"must be > 0, got {epsilon}")
    seed = _get_int(raw, "seed", "<root>", default=0)
    _require(0 <= seed < 2**64, "seed", f"must be a 64-bit unsigned integer, got {seed}")

    net_raw = raw.get("initial_network", {"edge_prob": DEFAULT_EDGE_PROB})
    _require(isinstance(net_raw, dict), "initial_network", "expected an object")
    has_edges = "edges" in net_raw
    has_prob = "edge_prob" in net_raw
    _require(has_edges != has_prob, "initial_network",
             "give exactly one of 'edges' or 'edge_prob'")
    if has_edges:
        edges_raw = net_raw["edges"]
        _require(isinstance(edges_raw, list), "initial_network.edges", "expected a list of pairs")
        edges = []
        for k, e in enumerate(edges_raw):
            _require(isinstance(e, list) and len(e) == 2,
                     f"initial_network.edges[{k}]", f"expected a pair [i, j], got {e!r}")
            i, j = e
            _require(isinstance(i, int) and isinstance(j, int),
                     f"initial_network.edges[{k}]", "indices must be integers")
            _require(0 <= i < n_agents and 0 <= j < n_agents,
                     f"initial_network.edges[{k}]", f"indices out of range for {n_agents} agents")
            _require(i != j, f"initial_network.edges[{k}]", "self-loops are not allowed")
            edges.append((i, j))
        net_spec = InitialNetworkSpec(edges=tuple(edges))
    else:
        edge_prob = float(_get_number(net_raw, "edge_prob", "initial_network"))
        _require(0.0 <= edge_prob <= 1.0, "initial_network.edge_prob",
                 f"must lie in [0, 1], got {edge_prob}")
        net_seed = None
        if "seed" in net_raw:
            net_seed = _get_int(net_raw, "seed", "initial_network")
            _require(0 <= net_seed < 2**64, "initial_network.seed",
                     f"must be a 64-bit unsigned integer, got {net_seed}")
        net_spec = InitialNetworkSpec(edge_prob=edge_prob, seed=net_seed)

    model = raw.get("model", "threeway")
    _require(model in MODELS, "model", f"unknown model {model!r}; expected one of {', '.join(MODELS)}")

    d_max = float(_get_number(raw, "d_max", "<root>", default=0.5))
    _require(d_max > 0.0, "d_max", f"must be > 0, got {d_max}")
    cluster_tolerance = None
    if "cluster_tolerance" in raw:
        cluster_tolerance = float(_get_number(raw, "cluster_tolerance", "<root>"))
        _require(cluster_tolerance >= 0.0, "cluster_tolerance",
                 f"must be >= 0, got {cluster_tolerance}")

    hk_raw = raw.get("hk", {})
    _require(isinstance(hk_raw, dict), "hk", "expected an object")
    hk_epsilon = None
    hk_epsilons = None
    if "epsilon" in hk_raw:
        hk_epsilon = float(_get_number(hk_raw, "epsilon", "hk"))
        _require(0.0 <= hk_epsilon <= 1.0, "hk.epsilon", f"must lie in [0, 1], got {hk_epsilon}")
    if "epsilons" in hk_raw:
        eps_raw = hk_raw["epsilons"]
        _require(isinstance(eps_raw, list), "hk.epsilons", "expected a list")
        _require(len(eps_raw) == n_agents, "hk.epsilons",
                 f"length {len(eps_raw)} does not match n_agents = {n_agents}")
        for k, v in enumerate(eps_raw):
            _require(isinstance(v, (int, float)) and not isinstance(v, bool) and 0.0 <= v <= 1.0,
                     f"hk.epsilons[{k}]", f"must be a number in [0, 1], got {v!r}")
        hk_epsilons = tuple(float(v) for v in eps_raw)
    if model == "hk-homogeneous":
        _require(hk_epsilon is not None, "hk.epsilon",
                 "required for model 'hk-homogeneous'")
    if model == "hk-heterogeneous":
        _require(hk_epsilons is not None, "hk.epsilons",
                 "required for model 'hk-heterogeneous'")

    dg_raw = raw.get("degroot", {})
    _require(isinstance(dg_raw, dict), "degroot", "expected an object")
    freeze = dg_raw.get("freeze_weights", False)
    _require(isinstance(freeze, bool), "degroot.freeze_weights", "expected a boolean")

    return SimulationConfig(
        n_agents=n_agents,
        initial_opinions=tuple(opinions),
        phi=phi,
        base=base,
        thresholds=thresholds,
        inertia=inertia,
        rewiring=rewiring,
        t_max=t_max,
        epsilon=epsilon,
        seed=seed,
        initial_network=net_spec,
        model=model,
        d_max=d_max,
        cluster_tolerance=cluster_tolerance,
        hk_epsilon=hk_epsilon,
        hk_epsilons=hk_epsilons,
        degroot_freeze_weights=freeze,
    )


def load_config(path) -> SimulationConfig:
    """Load and validate a JSON config file."""
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ConfigError(str(p), f"cannot read config file: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(str(p), f"invalid JSON: {exc}") from exc
    return config_from_dict(raw)
