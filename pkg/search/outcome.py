"""
Search Outcomes
Run configuration and results shared by both search methods
"""

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from config.settings import get_settings
from core.exceptions import RangeViolationError
from core.graph import EdgeSet, GraphSpec
from core.serialization import to_record as edges_to_record
from puniq.checker import is_path_unique
from bounds.closed_forms import upper_bound_best

logger = logging.getLogger(__name__)


class SearchMethod(Enum):
    EXHAUSTIVE = "Exhaustive"
    ANNEAL = "Anneal"


@dataclass(frozen=True)
class AnnealConfig:
    """
    Annealing schedule

    Args:
        seed: Root seed; chain i draws from child stream i
        iterations: Proposals per chain
        initial_temperature: Starting temperature, positive
        cooling_rate: Geometric factor in (0, 1)
        restarts: Independent chains, at least 1
        workers: Threads running chains concurrently
    """
    seed: int
    iterations: int
    initial_temperature: float
    cooling_rate: float
    restarts: int
    workers: int = 1

    def __post_init__(self):
        if self.seed < 0 or self.seed >= 2 ** 64:
            raise RangeViolationError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.iterations < 1:
            raise RangeViolationError(f"iterations must be positive, got {self.iterations}")
        if not self.initial_temperature > 0:
            raise RangeViolationError(f"initial temperature must be positive, got {self.initial_temperature}")
        if not 0 < self.cooling_rate < 1:
            raise RangeViolationError(f"cooling rate must lie in (0, 1), got {self.cooling_rate}")
        if self.restarts < 1:
            raise RangeViolationError(f"restarts must be at least 1, got {self.restarts}")
        if self.workers < 1:
            raise RangeViolationError(f"workers must be at least 1, got {self.workers}")

    @classmethod
    def from_settings(cls, **overrides) -> "AnnealConfig":
        """Defaults from settings, with None-valued overrides ignored"""
        settings = get_settings()
        values = {
            'seed': settings.seed,
            'iterations': settings.anneal_iterations,
            'initial_temperature': settings.anneal_temperature,
            'cooling_rate': settings.anneal_cooling,
            'restarts': settings.anneal_restarts,
            'workers': settings.anneal_workers,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True)
class SearchOutcome:
    """
    Best path-unique subgraph a search found

    `iterations` counts node expansions for the exhaustive method and
    proposals over all chains for annealing. `exact` is only set by a
    completed branch-and-bound.
    """
    spec: GraphSpec
    best_count: int
    witness: EdgeSet
    method: SearchMethod
    seed: int
    iterations: int
    exact: bool
    config: Optional[AnnealConfig] = None
    rng_algorithm: Optional[str] = None
    budget_exhausted: bool = False
    statistics: Dict[str, Any] = field(default_factory=dict)
    elapsed_seconds: float = field(default=0.0, compare=False)

    def to_record(self) -> Dict[str, Any]:
        return {
            'q': self.spec.q,
            'd': self.spec.d,
            'method': self.method.value,
            'best_count': self.best_count,
            'exact': self.exact,
            'budget_exhausted': self.budget_exhausted,
            'seed': self.seed,
            'rng_algorithm': self.rng_algorithm,
            'iterations': self.iterations,
            'config': asdict(self.config) if self.config else None,
            'statistics': self.statistics,
            'elapsed_seconds': round(self.elapsed_seconds, 3),
            'witness': edges_to_record(self.witness),
        }


def verify_outcome(outcome: SearchOutcome) -> bool:
    """
    Re-check an outcome independently of the search that produced it

    Returns:
        True when the witness belongs to the spec, has best_count edges,
        is path unique and does not beat the upper bound
    """
    witness = outcome.witness
    if witness.spec != outcome.spec:
        logger.warning(f"Witness graph {witness.spec} differs from {outcome.spec}")
        return False
    if len(witness) != outcome.best_count:
        logger.warning(f"Witness has {len(witness)} edges, outcome claims {outcome.best_count}")
        return False
    if not is_path_unique(witness):
        logger.warning(f"Witness for {outcome.spec} is not path unique")
        return False
    upper, _ = upper_bound_best(outcome.spec.q, outcome.spec.d)
    if outcome.best_count > upper:
        logger.warning(f"Outcome {outcome.best_count} exceeds upper bound {upper}")
        return False
    if outcome.exact and outcome.budget_exhausted:
        return False
    return True
