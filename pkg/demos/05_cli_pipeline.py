"""The config-driven pipeline: run, compare, sweep, metrics.

Builds a config file in a scratch directory and drives the four CLI verbs
through their entry point, then peeks at the files each one produced. The
same commands work from a shell:

    opiniondyn run     --config config.json --out out/run
    opiniondyn compare --config config.json --out out/cmp --models threeway,degroot-uniform
    opiniondyn sweep   --config config.json --out out/sweep --seeds 1..20
    opiniondyn metrics out/run/opinions.csv --out out/metrics
"""

import json
import tempfile
from pathlib import Path

from opiniondyn.cli import main as opiniondyn

REFERENCE_TERMS = [0, 3, 6, 0, 0, 0, 5, 3, 3, 3, 5, 1, 0, 5, 3, 0, 4, 3, 4, 3]


def show(path: Path, lines: int = 6) -> None:
    print(f"--- {path.name} (first {lines} lines)")
    for line in path.read_text().splitlines()[:lines]:
        print("   ", line)


def main() -> None:
    scratch = Path(tempfile.mkdtemp(prefix="opiniondyn-demo-"))
    config_path = scratch / "config.json"
    config_path.write_text(json.dumps({
        "n_agents": 20,
        "initial_opinions": REFERENCE_TERMS,
        "seed": 7,
        "initial_network": {"edge_prob": 0.1},
        "hk": {"epsilon": 0.25},
    }, indent=2))
    print(f"scratch directory: {scratch}\n")

    print("=== run ===")
    assert opiniondyn(["run", "--config", str(config_path), "--out", str(scratch / "run")]) == 0
    show(scratch / "run" / "summary.json", lines=18)
    show(scratch / "run" / "opinions.csv")
    show(scratch / "run" / "network_0.edges", lines=4)

    print("\n=== compare (same initial opinions, different update rules) ===")
    assert opiniondyn([
        "compare", "--config", str(config_path), "--out", str(scratch / "cmp"),
        "--models", "threeway,degroot-uniform,degroot-distance,hk-homogeneous:0.10",
    ]) == 0
    show(scratch / "cmp" / "comparison.csv", lines=6)

    print("\n=== sweep (per-seed summary rows) ===")
    assert opiniondyn(["sweep", "--config", str(config_path),
                       "--out", str(scratch / "sweep"), "--seeds", "1..20"]) == 0
    show(scratch / "sweep" / "sweep.csv", lines=8)

    print("\n=== metrics (recomputed from the opinions file alone) ===")
    assert opiniondyn(["metrics", str(scratch / "run" / "opinions.csv"),
                       "--out", str(scratch / "metrics")]) == 0
    show(scratch / "metrics" / "metrics.csv")

    print(f"\nall outputs kept under {scratch}")


if __name__ == "__main__":
    main()
