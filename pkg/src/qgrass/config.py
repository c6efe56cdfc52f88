"""Run configuration, optionally loaded from the file named by QGRASS_CONFIG."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields
from pathlib import Path

from .subspace import DEFAULT_BUDGET

ENV_VAR = "QGRASS_CONFIG"


@dataclass
class Config:
    enumeration_budget: int = DEFAULT_BUDGET
    default_q_list: tuple[int, ...] = (2, 3)
    # suite name -> list of grid entries (param dicts); replaces the built-in grid
    grids: dict[str, list[dict]] = field(default_factory=dict)
    output_dir: str = "."
    jobs: int = 1

    def __post_init__(self):
        if self.enumeration_budget < 1:
            raise ValueError("enumeration_budget must be >= 1")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        self.default_q_list = tuple(self.default_q_list)
        for name, grid in self.grids.items():
            if not isinstance(grid, list) or not all(isinstance(p, dict) for p in grid):
                raise ValueError(f"grid {name!r} must be a list of objects")


def load_config(path: str | Path | None = None) -> Config:
    """Read a JSON config; with no path, fall back to $QGRASS_CONFIG, then defaults."""
    if path is None:
        path = os.environ.get(ENV_VAR)
    if not path:
        return Config()
    data = json.loads(Path(path).read_text())
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return Config(**data)
