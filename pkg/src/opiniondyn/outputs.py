"""File emission: trajectory CSVs, per-iteration edge lists, summaries, manifests.

All data files are byte-deterministic for a given record: floats are written
with repr (shortest round-trip form) and JSON documents with a fixed layout.
The manifest is the only file carrying the seed and a timestamp.
"""

from __future__ import annotations

import csv
import json
import math
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .dynamics import TrajectoryRecord
from .metrics import cluster_count
from .network import save_edge_list

OPINIONS_FILE = "opinions.csv"
TERMS_FILE = "terms.csv"
METRICS_FILE = "metrics.csv"
SUMMARY_FILE = "summary.json"
MANIFEST_FILE = "manifest.json"


def fmt_float(v: float) -> str:
    return repr(float(v))


def _write_csv(path: Path, header: list[str], rows) -> None:
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exc:
        raise RuntimeError(f"cannot write {path}: {exc}") from exc


def summarize(record: TrajectoryRecord, cluster_tolerance: float) -> dict:
    """Seed-free digest of a finished run (final-state metrics)."""
    final_dm = record.delta_max[-1]
    return {
        "converged": record.converged,
        "iterations": record.iterations,
        "n_agents": record.n_agents,
        "cluster_tolerance": cluster_tolerance,
        "final": {
            "variance": float(record.variance[-1]),
            "range": float(record.opinion_range[-1]),
            "c_aad": float(record.consensus[-1]),
            "cluster_count": cluster_count(record.final_values, cluster_tolerance),
            "average_degree": float(record.avg_degree[-1]),
            "isolated_count": int(record.isolated[-1]),
            "delta_max": None if math.isnan(final_dm) else float(final_dm),
        },
    }


def write_trajectory(record: TrajectoryRecord, outdir: Path,
                     cluster_tolerance: float) -> dict[str, object]:
    """Write all data files for one run; returns relative output names."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    opinion_rows = []
    term_rows = []
    for k in range(record.iterations + 1):
        for agent in range(record.n_agents):
            opinion_rows.append(
                (k, agent, fmt_float(record.values[k, agent]), int(record.terms[k, agent]))
            )
            term_rows.append((k, agent, int(record.terms[k, agent])))
    _write_csv(outdir / OPINIONS_FILE, ["iteration", "agent", "value", "term_index"],
               opinion_rows)
    _write_csv(outdir / TERMS_FILE, ["iteration", "agent", "term_index"], term_rows)

    metric_rows = []
    for k in range(record.iterations + 1):
        dm = record.delta_max[k]
        metric_rows.append((
            k,
            fmt_float(record.variance[k]),
            fmt_float(record.opinion_range[k]),
            fmt_float(record.consensus[k]),
            fmt_float(record.avg_degree[k]),
            int(record.isolated[k]),
            "" if math.isnan(dm) else fmt_float(dm),
        ))
    _write_csv(outdir / METRICS_FILE,
               ["iteration", "variance", "range", "c_aad", "avg_degree", "isolated", "delta_max"],
               metric_rows)

    network_files = []
    for k, net in enumerate(record.networks):
        name = f"network_{k}.edges"
        try:
            save_edge_list(net, outdir / name)
        except OSError as exc:
            raise RuntimeError(f"cannot write {outdir / name}: {exc}") from exc
        network_files.append(name)

    summary = summarize(record, cluster_tolerance)
    _write_json(outdir / SUMMARY_FILE, summary)

    return {
        "opinions": OPINIONS_FILE,
        "terms": TERMS_FILE,
        "metrics": METRICS_FILE,
        "networks": network_files,
        "summary": SUMMARY_FILE,
    }


def _write_json(path: Path, payload: dict) -> None:
    try:
        Path(path).write_text(json.dumps(payload, indent=2) + "\n")
    except OSError as exc:
        raise RuntimeError(f"cannot write {path}: {exc}") from exc


def write_manifest(outdir: Path, command: str, config_echo: dict, seed,
                   outputs: dict) -> Path:
    """Record what ran and where the files went; echoes the resolved config."""
    manifest = {
        "engine": f"opiniondyn {__version__}",
        "command": command,
        "seed": seed,
        "config": config_echo,
        "outputs": outputs,
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    path = Path(outdir) / MANIFEST_FILE
    _write_json(path, manifest)
    return path
