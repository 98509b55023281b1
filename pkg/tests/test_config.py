import json

import pytest

from opiniondyn import ConfigError, config_from_dict, load_config
from conftest import REFERENCE_TERMS


def minimal() -> dict:
    return {"n_agents": 20, "initial_opinions": list(REFERENCE_TERMS)}


def test_minimal_config_gets_reference_defaults():
    cfg = config_from_dict(minimal())
    assert (cfg.phi, cfg.base) == (3, 2.0)
    assert (cfg.thresholds.alpha, cfg.thresholds.beta, cfg.thresholds.decay) == (0.3, 0.6, 10.0)
    assert cfg.inertia == 0.0
    assert (cfg.rewiring.delta_add, cfg.rewiring.delta_cut) == (0.15, 0.45)
    assert (cfg.rewiring.p_add, cfg.rewiring.p_cut) == (0.5, 0.5)
    assert (cfg.t_max, cfg.epsilon, cfg.seed) == (10, 1e-3, 0)
    assert cfg.model == "threeway"
    assert cfg.initial_network.edge_prob == 0.1


def test_alpha_above_beta_rejected():
    raw = minimal() | {"thresholds": {"alpha": 0.7, "beta": 0.6}}
    with pytest.raises(ConfigError) as err:
        config_from_dict(raw)
    assert "thresholds" in str(err.value)
    assert "alpha" in str(err.value)


def test_opinion_length_mismatch_rejected():
    raw = minimal()
    raw["initial_opinions"] = raw["initial_opinions"][:19]
    with pytest.raises(ConfigError) as err:
        config_from_dict(raw)
    assert "initial_opinions" in str(err.value)


def test_out_of_range_term_index_rejected():
    raw = minimal()
    raw["initial_opinions"][4] = 7
    with pytest.raises(ConfigError) as err:
        config_from_dict(raw)
    assert "initial_opinions[4]" in str(err.value)


def test_unknown_field_rejected():
    with pytest.raises(ConfigError) as err:
        config_from_dict(minimal() | {"alpha": 0.3})
    assert "alpha" in str(err.value)


@pytest.mark.parametrize("patch,path", [
    ({"n_agents": 0}, "n_agents"),
    ({"t_max": 0}, "t_max"),
    ({"epsilon": 0}, "epsilon"),
    ({"inertia": 1.5}, "inertia"),
    ({"seed": -1}, "seed"),
    ({"term_set": {"phi": 0}}, "term_set"),
    ({"term_set": {"base": 1.0}}, "term_set"),
    ({"rewiring": {"p_add": 1.5}}, "rewiring"),
    ({"model": "voter"}, "model"),
    ({"d_max": 0}, "d_max"),
    ({"initial_network": {"edges": [[0, 1]], "edge_prob": 0.1}}, "initial_network"),
    ({"initial_network": {"edges": [[0, 25]]}}, "initial_network.edges[0]"),
    ({"initial_network": {"edges": [[2, 2]]}}, "initial_network.edges[0]"),
    ({"initial_network": {"edge_prob": 1.5}}, "initial_network.edge_prob"),
])
def test_constraint_violations_name_the_field(patch, path):
    with pytest.raises(ConfigError) as err:
        config_from_dict(minimal() | patch)
    assert path in str(err.value)


def test_hk_models_require_bounds():
    with pytest.raises(ConfigError) as err:
        config_from_dict(minimal() | {"model": "hk-homogeneous"})
    assert "hk.epsilon" in str(err.value)
    with pytest.raises(ConfigError) as err:
        config_from_dict(minimal() | {"model": "hk-heterogeneous"})
    assert "hk.epsilons" in str(err.value)
    cfg = config_from_dict(minimal() | {"model": "hk-homogeneous", "hk": {"epsilon": 0.25}})
    assert list(cfg.hk_bounds()) == [0.25] * 20
    with pytest.raises(ConfigError):
        config_from_dict(minimal() | {"model": "hk-heterogeneous",
                                      "hk": {"epsilons": [0.2] * 19}})


def test_echo_round_trips():
    raw = minimal() | {
        "seed": 99,
        "thresholds": {"alpha": 0.2, "beta": 0.4, "lambda": 5},
        "initial_network": {"edges": [[0, 1], [2, 3]]},
        "model": "hk-homogeneous",
        "hk": {"epsilon": 0.3},
        "degroot": {"freeze_weights": True},
    }
    cfg = config_from_dict(raw)
    echoed = config_from_dict(cfg.to_dict())
    assert echoed == cfg
    # echo is JSON-serializable as-is
    json.dumps(cfg.to_dict())


def test_load_config_reports_file_problems(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError) as err:
        load_config(bad)
    assert "invalid JSON" in str(err.value)
    good = tmp_path / "good.json"
    good.write_text(json.dumps(minimal()))
    assert load_config(good).n_agents == 20
