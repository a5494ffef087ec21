"""Runtime configuration: budgets and output options."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, replace


class BudgetError(RuntimeError):
    """A computation was refused because it exceeds a configured budget."""


class UserError(ValueError):
    """Invalid input supplied by the caller (bad type string, weight, descriptor...)."""


@dataclass(frozen=True)
class Config:
    max_dim: int = 5000
    weyl_bound: int = 100000
    height_bound: int = 8
    parallel_workers: int = 1
    output_format: str = "json"

    def __post_init__(self):
        if self.max_dim <= 0 or self.weyl_bound <= 0 or self.height_bound <= 0:
            raise UserError("all budget bounds must be positive")
        if self.parallel_workers <= 0:
            raise UserError("parallel_workers must be positive")
        if self.output_format not in ("json", "table"):
            raise UserError("output_format must be 'json' or 'table'")

    def with_overrides(self, **kwargs) -> "Config":
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **kwargs) if kwargs else self


DEFAULT = Config()

CONFIG_ENV_VAR = "COHOMOLIB_CONFIG"


def load_config(path: str | None = None) -> Config:
    """Build a Config from a JSON file, the env-var override, or defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR)
    if path is None:
        return Config()
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UserError(f"cannot read config file {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise UserError("config file must contain a JSON object")
    allowed = {"max_dim", "weyl_bound", "height_bound", "parallel_workers", "output_format"}
    bad = set(data) - allowed
    if bad:
        raise UserError(f"unknown config keys: {sorted(bad)}")
    return Config(**data)
