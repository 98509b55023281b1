"""DeGroot and Hegselmann-Krause baselines on the reference opinions.

All baselines start from the same 20 initial opinions as the main model but
interact all-with-all (no network, no rewiring), isolating the update rule:
  - uniform DeGroot averages everyone and lands on the mean in one step;
  - distance-based DeGroot weights similar opinions more and settles a
    little away from the plain mean;
  - homogeneous HK fragments as the confidence bound shrinks;
  - heterogeneous HK is sensitive to single agents' bounds.
"""

import numpy as np

from opiniondyn import (
    build_term_set,
    cluster_count,
    default_cluster_tolerance,
    degroot_run,
    hk_run,
)

REFERENCE_TERMS = (0, 3, 6, 0, 0, 0, 5, 3, 3, 3, 5, 1, 0, 5, 3, 0, 4, 3, 4, 3)

HETERO_CASE1 = [0.2, 0.5, 0.3, 0.4, 0.2, 0.1, 0.9, 0.6, 0.5, 0.3,
                0.2, 0.1, 0.4, 0.4, 0.5, 0.3, 0.7, 0.4, 0.2, 0.2]


def cluster_values(values, tolerance) -> str:
    groups = []
    for v in sorted(values):
        if groups and v - groups[-1][-1] <= tolerance:
            groups[-1].append(v)
        else:
            groups.append([v])
    return ", ".join(f"{np.mean(g):.3f} x{len(g)}" for g in groups)


def main() -> None:
    ts = build_term_set(3, 2)
    x0 = ts.values[np.array(REFERENCE_TERMS)]
    tolerance = default_cluster_tolerance(ts)

    print("=== DeGroot ===")
    uniform = degroot_run(x0, "uniform", ts)
    print(f"uniform weights:  converged after {uniform.iterations} iterations; "
          f"everyone at {uniform.final_values[0]:.6f} (the plain mean)")
    distance = degroot_run(x0, "distance", ts)
    print(f"distance weights: converged after {distance.iterations} iterations; "
          f"everyone at {distance.final_values[0]:.6f} (similarity-weighted)")

    print("\n=== Homogeneous HK across confidence bounds ===")
    print("  eps   iters  clusters  final opinion camps")
    for eps in (0.35, 0.30, 0.25, 0.20, 0.15, 0.10):
        rec = hk_run(x0, np.full(20, eps), ts)
        camps = cluster_values(rec.final_values, tolerance)
        print(f" {eps:4.2f}   {rec.iterations:5d}  {cluster_count(rec.final_values, tolerance):8d}  {camps}")
    print("0.35 and 0.30 evolve identically; small bounds freeze many camps")

    print("\n=== Heterogeneous HK: single-agent bound changes flip the outcome ===")
    cases = {
        "case 1 (reference bounds)": list(HETERO_CASE1),
        "case 2 (agent 10: 0.3 -> 0.2)": HETERO_CASE1[:9] + [0.2] + HETERO_CASE1[10:],
        "case 3 (agent 17: 0.7 -> 0.3)": HETERO_CASE1[:16] + [0.3] + HETERO_CASE1[17:],
    }
    for label, bounds in cases.items():
        rec = hk_run(x0, np.array(bounds), ts)
        print(f"{label}: {cluster_count(rec.final_values, tolerance)} clusters "
              f"-> {cluster_values(rec.final_values, tolerance)}")


if __name__ == "__main__":
    main()
