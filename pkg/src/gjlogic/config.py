"""Runtime settings for sampling, certification and logging."""

from __future__ import annotations

import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()


@dataclass(frozen=True)
class GJLogicSettings:
    seed: int
    universe_size: int
    cs_sample_size: int
    prover_depth: int
    log_level: str = "WARNING"


def load_settings() -> GJLogicSettings:
    """Load sampling and oracle defaults from the environment."""
    return GJLogicSettings(
        seed=_get_int("GJLOGIC_SEED", 20190801),
        universe_size=_get_int("GJLOGIC_UNIVERSE_SIZE", 200),
        cs_sample_size=_get_int("GJLOGIC_CS_SAMPLE_SIZE", 20),
        prover_depth=_get_int("GJLOGIC_PROVER_DEPTH", 3),
        log_level=os.getenv("GJLOGIC_LOG_LEVEL", "WARNING").upper(),
    )


def _get_int(env_var: str, default: int) -> int:
    """Fetch an integer environment variable with a fallback."""
    raw_value = os.getenv(env_var)
    if raw_value is None:
        return default
    try:
        return int(raw_value)
    except ValueError as exc:  # provide clear feedback on misconfiguration
        raise ValueError(
            f"Environment variable {env_var} must be an integer, got {raw_value!r}."
        ) from exc


__all__ = ["GJLogicSettings", "load_settings"]
