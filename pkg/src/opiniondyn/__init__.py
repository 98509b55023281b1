"""Linguistic three-way-decision opinion dynamics over adaptive social networks.

A seed-reproducible simulator in which agents hold opinions on a linguistic
term scale, filter neighbors through an accept/hesitate/reject rule, average
what they accept, and probabilistically rewire their ties by opinion
similarity. DeGroot and Hegselmann-Krause baselines plus a consensus-metrics
suite ship alongside, all driven by JSON configs through a small CLI.
"""

__version__ = "0.1.0"

from .baselines import (
    degroot_run,
    degroot_step,
    degroot_weights,
    hk_confidence_set,
    hk_run,
    hk_step,
)
from .config import ConfigError, InitialNetworkSpec, SimulationConfig, config_from_dict, load_config
from .dynamics import (
    StepCounters,
    TrajectoryRecord,
    filter_neighbors,
    run,
    step,
    update_value,
)
from .linguistic import (
    LinguisticTermSet,
    build_term_set,
    nearest_term,
    negate_term,
    term_max,
    term_min,
    term_value,
)
from .metrics import (
    cluster_count,
    consensus_index,
    default_cluster_tolerance,
    delta_max,
    opinion_range,
    variance,
)
from .network import (
    NetworkStats,
    RewiringParams,
    SocialNetwork,
    centrality,
    complete_network,
    density,
    empty_network,
    load_network,
    network_from_edges,
    random_network,
    rewire,
    save_edge_list,
    stats,
)
from .threeway import (
    LossMatrix,
    ThreeWayRegion,
    ThreeWayThresholds,
    acceptance_probability,
    bayes_region,
    classify_neighbor,
    expected_losses,
)
