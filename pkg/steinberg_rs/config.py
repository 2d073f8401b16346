"""Runtime configuration.

Values are resolved in this order, later sources winning:

1. dataclass defaults
2. a TOML file (`configs/steinberg.toml`, or the path in `STEINBERG_CONFIG`)
3. environment: `STEINBERG_PRIME`, `STEINBERG_TRIALS`, `STEINBERG_SEED`
4. explicit overrides (CLI flags)

Example file:

    [oracle]
    prime = 2147483647
    trials = 7
    seed = 0

    [limits]
    max_partial_perm_n = 7
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, fields, replace
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import DomainError

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "configs" / "steinberg.toml"

_ENV_KEYS = {
    "STEINBERG_PRIME": "prime",
    "STEINBERG_TRIALS": "trials",
    "STEINBERG_SEED": "seed",
}

DEFAULT_PRIME = 2147483647

# Products of two residues must stay below 2**63 in int64 arithmetic.
MAX_PRIME = 2**31 - 1


@dataclass(frozen=True)
class SteinbergConfig:
    prime: int = DEFAULT_PRIME
    trials: int = 7
    seed: int = 0
    max_retries: int = 2
    max_tableau_size: int = 10
    max_partial_perm_n: int = 7
    max_orbit_n: int = 5
    max_image_n: int = 4

    def __post_init__(self) -> None:
        if self.prime < 2 or self.prime > MAX_PRIME or not is_prime(self.prime):
            raise DomainError(f"prime must be a prime below 2**31, got: {self.prime!r}")
        if self.trials < 1:
            raise DomainError(f"trials must be >= 1, got: {self.trials!r}")
        if self.max_retries < 0:
            raise DomainError(f"max_retries must be >= 0, got: {self.max_retries!r}")
        for name in ("max_tableau_size", "max_partial_perm_n", "max_orbit_n", "max_image_n"):
            if getattr(self, name) < 0:
                raise DomainError(f"{name} must be >= 0, got: {getattr(self, name)!r}")

    def with_overrides(self, **overrides: Any) -> "SteinbergConfig":
        clean = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **clean) if clean else self


@lru_cache(maxsize=None)
def is_prime(value: int) -> bool:
    if value < 2:
        return False
    if value % 2 == 0:
        return value == 2
    d = 3
    while d * d <= value:
        if value % d == 0:
            return False
        d += 2
    return True


def _read_toml(path: Path) -> Dict[str, Any]:
    raw = tomllib.loads(path.read_text(encoding="utf-8"))
    known = {f.name for f in fields(SteinbergConfig)}
    out: Dict[str, Any] = {}
    for section in ("oracle", "limits"):
        table = raw.get(section) or {}
        if not isinstance(table, dict):
            raise DomainError(f"config section [{section}] must be a table")
        for key, value in table.items():
            if key not in known:
                raise DomainError(f"unknown config key in [{section}]: {key!r}")
            out[key] = value
    return out


def _read_env() -> Dict[str, Any]:
    out: Dict[str, Any] = {}
    for env_name, key in _ENV_KEYS.items():
        value = os.environ.get(env_name)
        if value is None or not value.strip():
            continue
        try:
            out[key] = int(value.strip())
        except ValueError:
            raise DomainError(f"{env_name} must be an integer, got: {value!r}") from None
    return out


def load_config(path: Optional[Path] = None, **overrides: Any) -> SteinbergConfig:
    """Build a config from file, environment and explicit overrides."""

    values: Dict[str, Any] = {}
    if path is None:
        env_path = os.environ.get("STEINBERG_CONFIG")
        path = Path(env_path) if env_path else DEFAULT_CONFIG_PATH
        if path.exists():
            values.update(_read_toml(path))
        elif env_path:
            raise DomainError(f"config file not found: {str(path)!r}")
    else:
        if not path.exists():
            raise DomainError(f"config file not found: {str(path)!r}")
        values.update(_read_toml(path))

    values.update(_read_env())
    values.update({k: v for k, v in overrides.items() if v is not None})
    logger.debug("resolved config values: %s", values)
    return SteinbergConfig(**values)
