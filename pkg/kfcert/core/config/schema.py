# kfcert/core/config/schema.py
"""Schema and loader for counterexample-campaign configuration files (JSON or YAML)."""

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ..exceptions import ConfigurationError
from ..extremal import ExtremalParams, smallest_valid_order
from ..verification.data_models import Theorem

MAX_SEED = 2**64 - 1


class EdgeWindow(BaseModel):
    """Where random samples are drawn around the hypothesis boundary.

    Edge campaigns draw target edge counts uniformly from
    ``[anchor - below, anchor + above]`` around the edge threshold.
    Spectral campaigns anchor at the least edge count compatible with the
    spectral threshold (through Hong's bound) and draw up to the complete
    graph; ``above`` there bounds the extra edges added to the extremal
    graph in the supergraph samples.
    """

    below: int = Field(default=4, ge=0)
    above: int = Field(default=12, ge=0)


class GridSpec(BaseModel):
    t: List[int] = Field(min_length=1)
    k: Optional[List[int]] = Field(default=None, description="Defaults to every k in 1..t.")
    n: Union[Literal["min"], List[int]] = "min"
    n_offsets: List[int] = Field(
        default_factory=lambda: [0], description="Added to the minimum order when n is 'min'."
    )

    @field_validator("n_offsets")
    @classmethod
    def offsets_keep_parity(cls, offsets: List[int]) -> List[int]:
        for offset in offsets:
            if offset < 0 or offset % 2:
                raise ValueError(f"n offsets must be even and nonnegative, got {offset}")
        return offsets

    def cells(self, theorem: Theorem) -> List[Tuple[int, int, int]]:
        """Grid cells as ``(n, t, k)`` in t-major, k-minor, n-ascending order."""
        out: List[Tuple[int, int, int]] = []
        for t in self.t:
            for k in self.k if self.k is not None else range(1, t + 1):
                if not t >= k >= 1:
                    continue
                if self.n == "min":
                    base = smallest_valid_order(t, k, spectral=theorem == Theorem.THM5)
                    orders = [base + offset for offset in self.n_offsets]
                else:
                    orders = list(self.n)
                out.extend((n, t, k) for n in orders)
        return out


class CampaignConfig(BaseModel):
    theorem: Theorem = Theorem.THM4
    grid: GridSpec
    samples: int = Field(default=100, ge=1)
    seed: int = Field(default=0, ge=0, le=MAX_SEED)
    edges: EdgeWindow = Field(default_factory=EdgeWindow)
    include_extremal: bool = Field(
        default=True, description="Also verify the extremal graph itself once per cell."
    )
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def cells_are_valid(self) -> "CampaignConfig":
        cells = self.grid.cells(self.theorem)
        if not cells:
            raise ValueError("grid contains no cell with t >= k >= 1")
        for n, t, k in cells:
            try:
                ExtremalParams(n=n, t=t, k=k)
            except ValidationError as exc:
                reasons = "; ".join(err["msg"] for err in exc.errors())
                raise ValueError(f"grid cell (n={n}, t={t}, k={k}) is invalid: {reasons}") from None
        return self

    def cell_params(self) -> List[ExtremalParams]:
        return [ExtremalParams(n=n, t=t, k=k) for n, t, k in self.grid.cells(self.theorem)]


def load_campaign_config(path: Path) -> CampaignConfig:
    """Read a JSON or YAML campaign file; every failure becomes ``ConfigurationError``."""
    try:
        with open(path, "r") as f:
            data: Any = yaml.safe_load(f)
    except OSError as exc:
        raise ConfigurationError(f"cannot read config {path}: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigurationError(f"cannot parse config {path}: {exc}") from exc
    return campaign_config_from_dict(data, source=str(path))


def campaign_config_from_dict(data: Any, source: str = "<dict>") -> CampaignConfig:
    if not isinstance(data, dict):
        raise ConfigurationError(f"config {source} must be a mapping, got {type(data).__name__}")
    try:
        return CampaignConfig.model_validate(data)
    except ValidationError as exc:
        details = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or '<root>'}: {err['msg']}"
            for err in exc.errors()
        )
        raise ConfigurationError(f"invalid config {source}: {details}") from exc


def config_summary(config: CampaignConfig) -> Dict[str, Any]:
    return {
        "theorem": config.theorem.value,
        "cells": len(config.grid.cells(config.theorem)),
        "samples": config.samples,
        "seed": config.seed,
    }
