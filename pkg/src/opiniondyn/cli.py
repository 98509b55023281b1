"""Command-line surface: run, compare, sweep, metrics.

Every command is driven by a JSON config file (see README for the schema)
and writes its outputs into a directory. Exit codes: 0 success, 1 config
error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import baselines, dynamics
from .config import MODELS, ConfigError, SimulationConfig, load_config
from .dynamics import TrajectoryRecord
from .metrics import (
    cluster_count,
    consensus_index,
    default_cluster_tolerance,
    delta_max,
    opinion_range,
    variance,
)
from .outputs import METRICS_FILE, fmt_float, summarize, write_manifest, write_trajectory

COMPARISON_FILE = "comparison.csv"
SWEEP_FILE = "sweep.csv"


def run_from_config(config: SimulationConfig) -> TrajectoryRecord:
    """Execute the engine selected by config.model."""
    if config.model == "threeway":
        return dynamics.run(config)
    term_set = config.term_set()
    values0 = config.initial_values(term_set)
    if config.model in ("degroot-uniform", "degroot-distance"):
        mode = config.model.split("-", 1)[1]
        return baselines.degroot_run(
            values0, mode, term_set, t_max=config.t_max, tol=config.epsilon,
            d_max=config.d_max, freeze_weights=config.degroot_freeze_weights,
        )
    if config.model in ("hk-homogeneous", "hk-heterogeneous"):
        return baselines.hk_run(
            values0, config.hk_bounds(), term_set,
            t_max=config.t_max, tol=config.epsilon, d_max=config.d_max,
        )
    raise ConfigError("model", f"unknown model {config.model!r}")


def _cluster_tolerance(config: SimulationConfig) -> float:
    if config.cluster_tolerance is not None:
        return config.cluster_tolerance
    return default_cluster_tolerance(config.term_set())


def parse_model_spec(spec: str, config: SimulationConfig) -> SimulationConfig:
    """Derive a config for one compare entry, e.g. 'hk-homogeneous:0.25'.

    The optional ':value' sets the homogeneous confidence bound; other
    models take no parameter.
    """
    name, _, param = spec.partition(":")
    if name not in MODELS:
        raise ConfigError("models", f"unknown model {name!r}; expected one of {', '.join(MODELS)}")
    if param:
        if name != "hk-homogeneous":
            raise ConfigError("models", f"model {name!r} takes no parameter, got {spec!r}")
        try:
            eps = float(param)
        except ValueError as exc:
            raise ConfigError("models", f"bad epsilon in {spec!r}") from exc
        if not 0.0 <= eps <= 1.0:
            raise ConfigError("models", f"epsilon in {spec!r} must lie in [0, 1]")
        return replace(config, model=name, hk_epsilon=eps)
    derived = replace(config, model=name)
    if name == "hk-homogeneous" and derived.hk_epsilon is None:
        raise ConfigError("hk.epsilon", "required for model 'hk-homogeneous'")
    if name == "hk-heterogeneous" and derived.hk_epsilons is None:
        raise ConfigError("hk.epsilons", "required for model 'hk-heterogeneous'")
    return derived


def cmd_run(config: SimulationConfig, outdir: Path) -> Path:
    record = run_from_config(config)
    outputs = write_trajectory(record, outdir, _cluster_tolerance(config))
    manifest = write_manifest(outdir, "run", config.to_dict(), config.seed, outputs)
    summary = summarize(record, _cluster_tolerance(config))
    print(f"run: model={config.model} converged={summary['converged']} "
          f"iterations={summary['iterations']} -> {outdir}")
    return manifest


def _summary_row(label: str, record: TrajectoryRecord, tolerance: float) -> list:
    return [
        label,
        record.converged,
        record.iterations,
        fmt_float(record.variance[-1]),
        fmt_float(record.opinion_range[-1]),
        fmt_float(record.consensus[-1]),
        cluster_count(record.final_values, tolerance),
    ]


def cmd_compare(config: SimulationConfig, model_specs: list[str], outdir: Path) -> Path:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    tolerance = _cluster_tolerance(config)
    rows = []
    outputs: dict[str, object] = {}
    used_names: set[str] = set()
    for spec in model_specs:
        derived = parse_model_spec(spec, config)
        dirname = spec.replace(":", "_")
        while dirname in used_names:
            dirname += "_again"
        used_names.add(dirname)
        record = run_from_config(derived)
        model_outputs = write_trajectory(record, outdir / dirname, tolerance)
        outputs[dirname] = model_outputs
        rows.append(_summary_row(spec, record, tolerance))
        print(f"compare: {spec} converged={record.converged} iterations={record.iterations}")
    with open(outdir / COMPARISON_FILE, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["model", "converged", "iterations", "variance", "range",
                         "c_aad", "cluster_count"])
        writer.writerows(rows)
    outputs["comparison"] = COMPARISON_FILE
    return write_manifest(outdir, "compare", config.to_dict(),
                          config.seed, outputs)


def parse_seed_range(text: str) -> list[int]:
    """'start..end' (inclusive) or a single seed."""
    if ".." in text:
        start_s, _, end_s = text.partition("..")
        try:
            start, end = int(start_s), int(end_s)
        except ValueError as exc:
            raise ConfigError("seeds", f"bad seed range {text!r}") from exc
        if end < start:
            raise ConfigError("seeds", f"empty seed range {text!r}")
        return list(range(start, end + 1))
    try:
        return [int(text)]
    except ValueError as exc:
        raise ConfigError("seeds", f"bad seed range {text!r}") from exc


def cmd_sweep(config: SimulationConfig, seeds: list[int], outdir: Path) -> Path:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    tolerance = _cluster_tolerance(config)
    rows = []
    for seed in seeds:
        try:
            record = run_from_config(replace(config, seed=seed))
            rows.append([
                seed,
                record.converged,
                record.iterations,
                fmt_float(record.variance[-1]),
                fmt_float(record.opinion_range[-1]),
                fmt_float(record.consensus[-1]),
                cluster_count(record.final_values, tolerance),
                "",
            ])
        except Exception as exc:  # keep sweeping; the row records the failure
            rows.append([seed, "", "", "", "", "", "", str(exc)])
    with open(outdir / SWEEP_FILE, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["seed", "converged", "iterations", "variance", "range",
                         "c_aad", "cluster_count", "error"])
        writer.writerows(rows)
    print(f"sweep: {len(seeds)} seeds -> {outdir / SWEEP_FILE}")
    return write_manifest(outdir, "sweep", config.to_dict(),
                          f"{seeds[0]}..{seeds[-1]}", {"sweep": SWEEP_FILE})


def cmd_metrics(opinions_csv: Path, outdir: Path, d_max: float = 0.5) -> Path:
    """Recompute per-iteration metrics from an opinions CSV.

    Network stats are unknowable from opinions alone, so the avg_degree and
    isolated columns are left empty.
    """
    per_iteration: dict[int, dict[int, float]] = {}
    try:
        with open(opinions_csv, newline="") as fh:
            reader = csv.DictReader(fh)
            required = {"iteration", "agent", "value"}
            if reader.fieldnames is None or not required.issubset(reader.fieldnames):
                raise RuntimeError(
                    f"{opinions_csv}: expected columns iteration,agent,value[,term_index]")
            for row in reader:
                per_iteration.setdefault(int(row["iteration"]), {})[int(row["agent"])] = \
                    float(row["value"])
    except OSError as exc:
        raise RuntimeError(f"cannot read {opinions_csv}: {exc}") from exc

    if not per_iteration:
        raise RuntimeError(f"{opinions_csv}: no data rows")
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    rows = []
    previous = None
    for k in sorted(per_iteration):
        agents = per_iteration[k]
        values = np.array([agents[a] for a in sorted(agents)])
        dm = "" if previous is None else fmt_float(delta_max(previous, values))
        rows.append((
            k,
            fmt_float(variance(values)),
            fmt_float(opinion_range(values)),
            fmt_float(consensus_index(values, d_max)),
            "", "",
            dm,
        ))
        previous = values
    with open(outdir / METRICS_FILE, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "variance", "range", "c_aad", "avg_degree",
                         "isolated", "delta_max"])
        writer.writerows(rows)
    print(f"metrics: {len(rows)} iterations -> {outdir / METRICS_FILE}")
    return outdir / METRICS_FILE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opiniondyn",
        description="Linguistic three-way-decision opinion dynamics simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run one model from a config file")
    run_p.add_argument("--config", required=True, help="JSON config file")
    run_p.add_argument("--out", required=True, help="output directory")
    run_p.add_argument("--seed", type=int, default=None, help="override the config seed")

    cmp_p = sub.add_parser("compare", help="run several models from the same initial opinions")
    cmp_p.add_argument("--config", required=True)
    cmp_p.add_argument("--out", required=True)
    cmp_p.add_argument("--seed", type=int, default=None)
    cmp_p.add_argument("--models", required=True,
                       help="comma-separated model list, e.g. "
                            "'threeway,degroot-uniform,hk-homogeneous:0.25'")

    sweep_p = sub.add_parser("sweep", help="run one config over a seed range")
    sweep_p.add_argument("--config", required=True)
    sweep_p.add_argument("--out", required=True)
    sweep_p.add_argument("--seeds", required=True, help="inclusive range 'start..end'")

    met_p = sub.add_parser("metrics", help="recompute metrics from an opinions CSV")
    met_p.add_argument("opinions_csv", help="opinions.csv produced by a run")
    met_p.add_argument("--out", required=True)
    met_p.add_argument("--d-max", type=float, default=0.5,
                       help="consensus-index normalizer (default 0.5)")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "metrics":
            cmd_metrics(Path(args.opinions_csv), Path(args.out), args.d_max)
            return 0
        config = load_config(args.config)
        if getattr(args, "seed", None) is not None:
            if not 0 <= args.seed < 2**64:
                raise ConfigError("seed", f"must be a 64-bit unsigned integer, got {args.seed}")
            config = replace(config, seed=args.seed)
        if args.command == "run":
            cmd_run(config, Path(args.out))
        elif args.command == "compare":
            specs = [s.strip() for s in args.models.split(",") if s.strip()]
            if not specs:
                raise ConfigError("models", "empty model list")
            cmd_compare(config, specs, Path(args.out))
        elif args.command == "sweep":
            cmd_sweep(config, parse_seed_range(args.seeds), Path(args.out))
        return 0
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
