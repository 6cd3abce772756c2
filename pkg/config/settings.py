"""
Settings
Environment-driven defaults loaded from .env
"""

import logging
import os
from dataclasses import dataclass
from functools import lru_cache

from dotenv import load_dotenv

logger = logging.getLogger(__name__)


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        logger.warning(f"Ignoring non-numeric {name}={raw!r}, using {default}")
        return default


@dataclass(frozen=True)
class Settings:
    """
    Process-wide defaults

    Library calls take explicit arguments; these values only fill in
    what the caller leaves out.
    """
    log_level: str = "WARNING"
    anneal_temperature: float = 2.0
    anneal_cooling: float = 0.9995
    anneal_iterations: int = 100_000
    anneal_restarts: int = 8
    anneal_workers: int = 1
    seed: int = 20240601
    search_budget: int = 50_000_000
    labeling_max_states: int = 2 ** 26
    eta_max_words: int = 2 ** 22

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Build settings from the environment (after loading .env)

        Returns:
            Settings instance
        """
        load_dotenv()
        defaults = cls()
        return cls(
            log_level=os.getenv("LOG_LEVEL", defaults.log_level).upper(),
            anneal_temperature=_env_float("DEBRUIJN_ANNEAL_TEMPERATURE", defaults.anneal_temperature),
            anneal_cooling=_env_float("DEBRUIJN_ANNEAL_COOLING", defaults.anneal_cooling),
            anneal_iterations=_env_int("DEBRUIJN_ANNEAL_ITERATIONS", defaults.anneal_iterations),
            anneal_restarts=_env_int("DEBRUIJN_ANNEAL_RESTARTS", defaults.anneal_restarts),
            anneal_workers=_env_int("DEBRUIJN_ANNEAL_WORKERS", defaults.anneal_workers),
            seed=_env_int("DEBRUIJN_SEED", defaults.seed),
            search_budget=_env_int("DEBRUIJN_SEARCH_BUDGET", defaults.search_budget),
            labeling_max_states=_env_int("DEBRUIJN_LABELING_MAX_STATES", defaults.labeling_max_states),
            eta_max_words=_env_int("DEBRUIJN_ETA_MAX_WORDS", defaults.eta_max_words),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get the cached process settings"""
    return Settings.from_env()
