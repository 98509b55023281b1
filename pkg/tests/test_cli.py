import csv
import json
from pathlib import Path

import pytest

from opiniondyn import cli
from conftest import REFERENCE_TERMS


def write_config(tmp_path: Path, **overrides) -> Path:
    raw = {"n_agents": 20, "initial_opinions": list(REFERENCE_TERMS), "seed": 7}
    raw.update(overrides)
    path = tmp_path / "config.json"
    path.write_text(json.dumps(raw))
    return path


def read_rows(path: Path) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_run_command_outputs(tmp_path):
    cfg = write_config(tmp_path)
    out = tmp_path / "out"
    assert cli.main(["run", "--config", str(cfg), "--out", str(out)]) == 0

    summary = json.loads((out / "summary.json").read_text())
    iterations = summary["iterations"]
    opinions = read_rows(out / "opinions.csv")
    assert len(opinions) == (iterations + 1) * 20
    terms = read_rows(out / "terms.csv")
    assert len(terms) == (iterations + 1) * 20
    metrics = read_rows(out / "metrics.csv")
    assert len(metrics) == iterations + 1
    assert metrics[0]["delta_max"] == ""
    for k in range(iterations + 1):
        assert (out / f"network_{k}.edges").exists()

    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["seed"] == 7
    assert manifest["config"]["n_agents"] == 20
    assert manifest["outputs"]["opinions"] == "opinions.csv"


def test_manifest_echo_reproduces_run(tmp_path):
    cfg = write_config(tmp_path)
    first = tmp_path / "first"
    assert cli.main(["run", "--config", str(cfg), "--out", str(first)]) == 0
    echo = json.loads((first / "manifest.json").read_text())["config"]
    echoed_cfg = tmp_path / "echoed.json"
    echoed_cfg.write_text(json.dumps(echo))
    second = tmp_path / "second"
    assert cli.main(["run", "--config", str(echoed_cfg), "--out", str(second)]) == 0
    for name in ("opinions.csv", "terms.csv", "metrics.csv", "summary.json"):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_run_seed_override(tmp_path):
    cfg = write_config(tmp_path)
    out_a = tmp_path / "a"
    out_b = tmp_path / "b"
    assert cli.main(["run", "--config", str(cfg), "--out", str(out_a), "--seed", "3"]) == 0
    assert cli.main(["run", "--config", str(cfg), "--out", str(out_b), "--seed", "3"]) == 0
    assert (out_a / "opinions.csv").read_bytes() == (out_b / "opinions.csv").read_bytes()
    manifest = json.loads((out_a / "manifest.json").read_text())
    assert manifest["seed"] == 3


def test_run_empty_network_with_zero_beta_freezes(tmp_path):
    cfg = write_config(
        tmp_path,
        initial_network={"edges": []},
        thresholds={"alpha": 0.0, "beta": 0.0},
    )
    out = tmp_path / "frozen"
    assert cli.main(["run", "--config", str(cfg), "--out", str(out)]) == 0
    summary = json.loads((out / "summary.json").read_text())
    assert summary["converged"] is True
    assert summary["iterations"] == 1
    rows = read_rows(out / "opinions.csv")
    by_iteration = {}
    for row in rows:
        by_iteration.setdefault(row["iteration"], []).append((row["agent"], row["value"]))
    assert by_iteration["0"] == by_iteration["1"]


def test_compare_outputs_match_run(tmp_path):
    cfg = write_config(tmp_path, hk={"epsilon": 0.25})
    run_out = tmp_path / "single"
    cmp_out = tmp_path / "cmp"
    assert cli.main(["run", "--config", str(cfg), "--out", str(run_out)]) == 0
    assert cli.main([
        "compare", "--config", str(cfg), "--out", str(cmp_out),
        "--models", "threeway,degroot-uniform,degroot-distance,hk-homogeneous:0.10,hk-homogeneous",
    ]) == 0

    # per-model data files are bit-identical to a plain run of the same model
    for name in ("opinions.csv", "terms.csv", "metrics.csv", "summary.json"):
        assert (cmp_out / "threeway" / name).read_bytes() == (run_out / name).read_bytes()

    table = read_rows(cmp_out / "comparison.csv")
    assert [row["model"] for row in table] == [
        "threeway", "degroot-uniform", "degroot-distance",
        "hk-homogeneous:0.10", "hk-homogeneous",
    ]
    degroot = next(r for r in table if r["model"] == "degroot-uniform")
    assert degroot["cluster_count"] == "1"
    hk_low = next(r for r in table if r["model"] == "hk-homogeneous:0.10")
    assert int(hk_low["cluster_count"]) > 1


def test_compare_emits_one_trajectory_set_per_entry(tmp_path):
    cfg = write_config(tmp_path)
    out = tmp_path / "sixfold"
    specs = [f"hk-homogeneous:{eps}" for eps in (0.35, 0.30, 0.25, 0.20, 0.15, 0.10)]
    assert cli.main(["compare", "--config", str(cfg), "--out", str(out),
                     "--models", ",".join(specs)]) == 0
    dirs = sorted(p.name for p in out.iterdir() if p.is_dir())
    assert len(dirs) == 6
    for d in dirs:
        assert (out / d / "opinions.csv").exists()
    assert len(read_rows(out / "comparison.csv")) == 6


def test_run_engine_error_leaves_no_partial_outputs(tmp_path, monkeypatch):
    cfg = write_config(tmp_path)

    def boom(config):
        raise RuntimeError("engine exploded")

    monkeypatch.setattr(cli, "run_from_config", boom)
    out = tmp_path / "out"
    assert cli.main(["run", "--config", str(cfg), "--out", str(out)]) == 2
    assert not out.exists() or not any(out.iterdir())


def test_compare_rejects_unknown_model(tmp_path, capsys):
    cfg = write_config(tmp_path)
    code = cli.main(["compare", "--config", str(cfg), "--out", str(tmp_path / "x"),
                     "--models", "threeway,voter"])
    assert code == 1
    assert "voter" in capsys.readouterr().err


def test_sweep_concatenation_property(tmp_path):
    cfg = write_config(tmp_path)
    full = tmp_path / "full"
    part1 = tmp_path / "p1"
    part2 = tmp_path / "p2"
    assert cli.main(["sweep", "--config", str(cfg), "--out", str(full), "--seeds", "1..6"]) == 0
    assert cli.main(["sweep", "--config", str(cfg), "--out", str(part1), "--seeds", "1..3"]) == 0
    assert cli.main(["sweep", "--config", str(cfg), "--out", str(part2), "--seeds", "4..6"]) == 0
    merged = read_rows(part1 / "sweep.csv") + read_rows(part2 / "sweep.csv")
    assert merged == read_rows(full / "sweep.csv")


def test_sweep_deterministic_config_rows_differ_only_in_seed(tmp_path):
    cfg = write_config(
        tmp_path,
        thresholds={"alpha": 0.6, "beta": 0.6},
        rewiring={"p_add": 0.0, "p_cut": 0.0},
        initial_network={"edges": [[0, 1], [2, 3], [4, 5]]},
    )
    out = tmp_path / "sw"
    assert cli.main(["sweep", "--config", str(cfg), "--out", str(out), "--seeds", "1..5"]) == 0
    rows = read_rows(out / "sweep.csv")
    assert [r["seed"] for r in rows] == ["1", "2", "3", "4", "5"]
    stripped = [{k: v for k, v in r.items() if k != "seed"} for r in rows]
    assert all(r == stripped[0] for r in stripped)
    assert all(r["error"] == "" for r in rows)


def test_sweep_records_per_seed_failures(tmp_path, monkeypatch):
    cfg = write_config(tmp_path)
    real = cli.run_from_config

    def flaky(config):
        if config.seed == 2:
            raise RuntimeError("boom")
        return real(config)

    monkeypatch.setattr(cli, "run_from_config", flaky)
    out = tmp_path / "sw"
    assert cli.main(["sweep", "--config", str(cfg), "--out", str(out), "--seeds", "1..3"]) == 0
    rows = read_rows(out / "sweep.csv")
    assert rows[1]["seed"] == "2" and rows[1]["error"] == "boom"
    assert rows[0]["error"] == "" and rows[2]["error"] == ""


def test_metrics_command_recomputes_run_metrics(tmp_path):
    cfg = write_config(tmp_path)
    run_out = tmp_path / "run"
    met_out = tmp_path / "met"
    assert cli.main(["run", "--config", str(cfg), "--out", str(run_out)]) == 0
    assert cli.main(["metrics", str(run_out / "opinions.csv"), "--out", str(met_out)]) == 0
    original = read_rows(run_out / "metrics.csv")
    recomputed = read_rows(met_out / "metrics.csv")
    assert len(original) == len(recomputed)
    for a, b in zip(original, recomputed):
        for column in ("iteration", "variance", "range", "c_aad", "delta_max"):
            assert a[column] == b[column]
        assert b["avg_degree"] == "" and b["isolated"] == ""


def test_exit_codes(tmp_path, capsys):
    bad_cfg = tmp_path / "bad.json"
    bad_cfg.write_text(json.dumps({"n_agents": 20, "initial_opinions": [0] * 19}))
    assert cli.main(["run", "--config", str(bad_cfg), "--out", str(tmp_path / "x")]) == 1
    assert "initial_opinions" in capsys.readouterr().err

    assert cli.main(["metrics", str(tmp_path / "nope.csv"),
                     "--out", str(tmp_path / "y")]) == 2

    missing = cli.main(["run", "--config", str(tmp_path / "ghost.json"),
                        "--out", str(tmp_path / "z")])
    assert missing == 1


def test_parse_seed_range():
    assert cli.parse_seed_range("3..6") == [3, 4, 5, 6]
    assert cli.parse_seed_range("9") == [9]
    with pytest.raises(Exception):
        cli.parse_seed_range("6..3")
    with pytest.raises(Exception):
        cli.parse_seed_range("a..b")
