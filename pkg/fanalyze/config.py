"""Runtime configuration.

Each setting is resolved in the same order:
1. Explicit override parameter (usually a CLI flag)
2. Environment variable
3. Built-in default
"""

import logging
import os
from dataclasses import dataclass
from typing import Optional

DEFAULT_MAX_SUBDIVISIONS = 10_000
DEFAULT_ORACLE_SEED = 20240229
DEFAULT_ORACLE_SAMPLES = 2000
DEFAULT_ORACLE_BOUND = 5
DEFAULT_LOG_LEVEL = "WARNING"


def _env_int(name: str) -> Optional[int]:
    value = os.environ.get(name)
    if value is None or value.strip() == "":
        return None
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}")


def get_max_subdivisions(override: Optional[int] = None) -> int:
    """Cap on stellar subdivision steps during resolve (FANALYZE_MAX_SUBDIVISIONS)."""
    if override is not None:
        return override
    env = _env_int("FANALYZE_MAX_SUBDIVISIONS")
    if env is not None:
        return env
    return DEFAULT_MAX_SUBDIVISIONS


def get_degree_bound(override: Optional[int] = None) -> Optional[int]:
    """Bound for obstruction exponents (FANALYZE_DEGREE_BOUND); None means skip."""
    if override is not None:
        return override
    return _env_int("FANALYZE_DEGREE_BOUND")


def get_log_level(override: Optional[str] = None) -> int:
    """Logging level name from override or FANALYZE_LOG_LEVEL."""
    name = override or os.environ.get("FANALYZE_LOG_LEVEL") or DEFAULT_LOG_LEVEL
    level = logging.getLevelName(name.upper())
    if not isinstance(level, int):
        raise ValueError(f"Unknown log level: {name}")
    return level


@dataclass(frozen=True)
class OracleConfig:
    """Settings for the verification oracles."""

    seed: int = DEFAULT_ORACLE_SEED
    sample_count: int = DEFAULT_ORACLE_SAMPLES
    lattice_bound: int = DEFAULT_ORACLE_BOUND

    def __post_init__(self):
        if self.sample_count <= 0:
            raise ValueError("sample_count must be positive")
        if self.lattice_bound <= 0:
            raise ValueError("lattice_bound must be positive")


def get_oracle_config(
    seed: Optional[int] = None,
    sample_count: Optional[int] = None,
    lattice_bound: Optional[int] = None,
) -> OracleConfig:
    """Build an OracleConfig from overrides, FANALYZE_ORACLE_* variables and defaults."""

    def pick(value: Optional[int], env_name: str, default: int) -> int:
        if value is not None:
            return value
        env = _env_int(env_name)
        return env if env is not None else default

    return OracleConfig(
        seed=pick(seed, "FANALYZE_ORACLE_SEED", DEFAULT_ORACLE_SEED),
        sample_count=pick(sample_count, "FANALYZE_ORACLE_SAMPLES", DEFAULT_ORACLE_SAMPLES),
        lattice_bound=pick(lattice_bound, "FANALYZE_ORACLE_BOUND", DEFAULT_ORACLE_BOUND),
    )
