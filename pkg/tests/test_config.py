import json
from pathlib import Path

import pytest
import yaml

from kfcert.core.config.schema import (
    CampaignConfig,
    GridSpec,
    campaign_config_from_dict,
    config_summary,
    load_campaign_config,
)
from kfcert.core.exceptions import ConfigurationError
from kfcert.core.verification.data_models import Theorem

CAMPAIGNS = Path(__file__).resolve().parent.parent / "campaigns"


class TestGridSpec:
    def test_min_orders_per_theorem(self):
        grid = GridSpec(t=[1, 5], k=[1, 5])
        assert grid.cells(Theorem.THM4) == [(17, 1, 1), (47, 5, 1), (25, 5, 5)]
        assert grid.cells(Theorem.THM5) == [(17, 1, 1), (47, 5, 1), (41, 5, 5)]

    def test_offsets_and_default_k(self):
        grid = GridSpec(t=[2], n_offsets=[0, 2])
        assert grid.cells(Theorem.THM4) == [(25, 2, 1), (27, 2, 1), (20, 2, 2), (22, 2, 2)]

    def test_explicit_orders(self):
        assert GridSpec(t=[1], k=[1], n=[17, 19]).cells(Theorem.THM4) == [(17, 1, 1), (19, 1, 1)]

    def test_odd_offset_rejected(self):
        with pytest.raises(ValueError):
            GridSpec(t=[1], n_offsets=[1])


class TestCampaignConfig:
    def test_defaults(self):
        config = CampaignConfig(grid=GridSpec(t=[1]))
        assert config.theorem == Theorem.THM4
        assert config.samples == 100
        assert config.edges.below == 4 and config.edges.above == 12
        assert config.include_extremal and config.workers == 1
        assert [p.n for p in config.cell_params()] == [17]

    @pytest.mark.parametrize(
        "data",
        [
            {"grid": {"t": [1], "k": [1], "n": [18]}},  # parity
            {"grid": {"t": [1], "k": [2]}},  # no cell with t >= k
            {"grid": {"t": [1]}, "samples": 0},
            {"grid": {"t": [1]}, "seed": -1},
            {"grid": {"t": [1]}, "seed": 2**64},
            {"grid": {"t": [1]}, "theorem": "thm6"},
            {"samples": 10},
        ],
    )
    def test_invalid_configs(self, data):
        with pytest.raises(ConfigurationError):
            campaign_config_from_dict(data)

    def test_non_mapping_rejected(self):
        with pytest.raises(ConfigurationError):
            campaign_config_from_dict([1, 2, 3])

    def test_summary(self):
        config = campaign_config_from_dict({"theorem": "thm5", "grid": {"t": [1, 2]}, "seed": 5})
        assert config_summary(config) == {"theorem": "thm5", "cells": 3, "samples": 100, "seed": 5}


class TestLoading:
    def test_yaml_file(self, tmp_path):
        path = tmp_path / "campaign.yaml"
        path.write_text(
            yaml.safe_dump({"theorem": "thm4", "grid": {"t": [2], "k": [1]}, "samples": 3, "edges": {"below": 2}})
        )
        config = load_campaign_config(path)
        assert config.samples == 3
        assert config.edges.below == 2 and config.edges.above == 12

    def test_json_file(self, tmp_path):
        path = tmp_path / "campaign.json"
        path.write_text(json.dumps({"grid": {"t": [1], "k": [1]}, "seed": 42}))
        assert load_campaign_config(path).seed == 42

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError):
            load_campaign_config(tmp_path / "absent.yaml")

    @pytest.mark.parametrize("name", ["thm4_grid.yaml", "thm5_grid.yaml", "smoke.json"])
    def test_shipped_campaigns_load(self, name):
        config = load_campaign_config(CAMPAIGNS / name)
        assert config.cell_params()

    def test_syntax_error(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("grid: [unclosed\n")
        with pytest.raises(ConfigurationError):
            load_campaign_config(path)
