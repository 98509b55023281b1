"""How the accept/hesitate/reject thresholds shape the outcome.

Three effects, each over a set of seeds:
  1. wider acceptance windows pull the group toward fewer opinion camps;
  2. the hesitation zone slows convergence relative to a hard cutoff
     (visible in the per-step maximum opinion change);
  3. larger populations still integrate, thanks to adaptive rewiring.
"""

import statistics

import numpy as np

from opiniondyn import (
    InitialNetworkSpec,
    SimulationConfig,
    ThreeWayThresholds,
    cluster_count,
    default_cluster_tolerance,
    run,
)

REFERENCE_TERMS = (0, 3, 6, 0, 0, 0, 5, 3, 3, 3, 5, 1, 0, 5, 3, 0, 4, 3, 4, 3)


def scenario(seed: int, alpha: float, beta: float, n: int = 20,
             terms=REFERENCE_TERMS, t_max: int = 10) -> SimulationConfig:
    return SimulationConfig(
        n_agents=n,
        initial_opinions=terms,
        thresholds=ThreeWayThresholds(alpha=alpha, beta=beta, decay=10.0),
        t_max=t_max,
        seed=seed,
        initial_network=InitialNetworkSpec(edge_prob=0.1),
    )


def main() -> None:
    tolerance = default_cluster_tolerance(
        SimulationConfig(n_agents=1, initial_opinions=(0,)).term_set()
    )
    seeds = range(1, 31)

    print("=== 1. Acceptance window vs final fragmentation (30 seeds) ===")
    print("alpha  beta   mean clusters   mean final variance")
    for alpha, beta in ((0.2, 0.4), (0.3, 0.6), (0.5, 0.9)):
        counts, variances = [], []
        for seed in seeds:
            record = run(scenario(seed, alpha, beta))
            counts.append(cluster_count(record.final_values, tolerance))
            variances.append(record.variance[-1])
        print(f"{alpha:5.2f} {beta:5.2f}   {statistics.mean(counts):13.2f}"
              f"   {statistics.mean(variances):19.4f}")
    print("narrow windows leave more camps; wide ones approach global agreement")

    print("\n=== 2. Hesitation zone vs hard cutoff at 40 agents (30 seeds) ===")
    # the slowdown from probabilistic acceptance shows up in larger groups
    def forty_agents(seed: int, alpha: float) -> int:
        gen = np.random.default_rng(seed)
        terms = tuple(int(t) for t in gen.integers(0, 7, size=40))
        return run(scenario(seed, alpha, 0.6, n=40, terms=terms, t_max=30)).iterations

    with_hesitation = [forty_agents(s, 0.3) for s in seeds]
    hard_cutoff = [forty_agents(s, 0.6) for s in seeds]
    print(f"mean iterations to converge: {statistics.mean(with_hesitation):.2f} "
          f"(hesitation) vs {statistics.mean(hard_cutoff):.2f} (hard cutoff)")
    print("probabilistic acceptance keeps stirring near-boundary pairs, so the")
    print("same populations settle later than under a deterministic cutoff")

    print("\n=== 3. Population scaling with adaptive rewiring (10 seeds each) ===")
    print("   n   converged   mean clusters   avg degree growth")
    for n in (20, 30, 50):
        converged, counts, growth = 0, [], []
        for seed in range(1, 11):
            gen = np.random.default_rng(seed)
            terms = tuple(int(t) for t in gen.integers(0, 7, size=n))
            record = run(scenario(seed, 0.3, 0.6, n=n, terms=terms, t_max=20))
            converged += record.converged
            counts.append(cluster_count(record.final_values, tolerance))
            growth.append(record.avg_degree[-1] - record.avg_degree[0])
        print(f"{n:4d}   {converged:9d}   {statistics.mean(counts):13.2f}"
              f"   {statistics.mean(growth):17.2f}")


if __name__ == "__main__":
    main()
