"""
Annealing Search
Seeded simulated annealing over vertex orderings, chains run in worker threads
"""

import logging
import time
from threading import Lock, Thread
from typing import List, Optional, Tuple

import numpy as np

from core.graph import EdgeSet, GraphSpec
from puniq.kernels import allocate_workspace
from search.base import SearchStrategy
from search.kernels import anneal_chain, repair_ordering
from search.outcome import AnnealConfig, SearchMethod, SearchOutcome
from search.statistics import SearchStatistics

logger = logging.getLogger(__name__)

RNG_ALGORITHM = "PCG64"

ChainResult = Tuple[int, Tuple[int, ...]]


class AnnealSearch(SearchStrategy):
    """
    Upper-triangle annealing

    Each restart is an independent chain whose random stream is child i
    of SeedSequence(seed), so results do not depend on how many worker
    threads share the chains.
    """

    name = "anneal"

    def __init__(self, config: Optional[AnnealConfig] = None):
        """
        Initialize annealing search

        Args:
            config: Schedule, default AnnealConfig.from_settings()
        """
        self.config = config or AnnealConfig.from_settings()
        self._lock = Lock()

        logger.info(f"Anneal Search initialized with {self.config.restarts} restarts "
                    f"x {self.config.iterations} iterations")

    def _draws(self, spec: GraphSpec, stream: np.random.SeedSequence):
        """Initial ordering, swap positions and acceptance draws of one chain"""
        rng = np.random.Generator(np.random.PCG64(stream))
        n = spec.vertex_count
        order = rng.permutation(n).astype(np.int64)
        swaps = rng.integers(0, n, size=(self.config.iterations, 2), dtype=np.int64)
        uniforms = rng.random(self.config.iterations)
        return order, swaps, uniforms

    def _run_chain(self, spec: GraphSpec, chain: int, stream: np.random.SeedSequence) -> Optional[ChainResult]:
        order, swaps, uniforms = self._draws(spec, stream)
        visited, parent, queue = allocate_workspace(spec.vertex_count)
        iterations = self.config.iterations

        # the repair swaps come out of the same budget and stream as the chain
        repaired = repair_ordering(spec.q, spec.vertex_count, order, swaps, visited, parent, queue)
        if repaired < 0:
            self.statistics.record_chain(chain, -1, 0, 0, 0, repair_swaps=iterations)
            logger.warning(f"{spec}: chain {chain} found no path-unique starting ordering "
                           f"in {iterations} swaps")
            return None

        best_mask = np.zeros(spec.edge_count, dtype=np.uint8)
        best, accepted, valid_states = anneal_chain(
            spec.q, spec.vertex_count, order, swaps[repaired:], uniforms[repaired:],
            self.config.initial_temperature, self.config.cooling_rate,
            visited, parent, queue, best_mask)
        self.statistics.record_chain(chain, int(best), iterations - repaired, int(accepted),
                                     int(valid_states), repair_swaps=repaired)
        logger.debug(f"{spec}: chain {chain} best {best} after {repaired} repair swaps")
        return int(best), tuple(int(e) for e in np.flatnonzero(best_mask))

    def _worker(self, spec: GraphSpec, streams, results: List[Optional[ChainResult]], pending: List[int]):
        while True:
            with self._lock:
                if not pending:
                    return
                chain = pending.pop(0)
            results[chain] = self._run_chain(spec, chain, streams[chain])

    def run(self, spec: GraphSpec) -> SearchOutcome:
        """
        Run every chain and keep the best witness

        Args:
            spec: Graph spec

        Returns:
            SearchOutcome (never exact); best_count 0 with an empty
            witness when no chain found a path-unique state
        """
        started = time.perf_counter()
        config = self.config
        self.statistics = SearchStatistics()
        streams = np.random.SeedSequence(config.seed).spawn(config.restarts)
        results: List[Optional[ChainResult]] = [None] * config.restarts
        pending = list(range(config.restarts))

        workers = [
            Thread(target=self._worker, args=(spec, streams, results, pending), daemon=True)
            for _ in range(min(config.workers, config.restarts))
        ]
        for worker in workers:
            worker.start()
        for worker in workers:
            worker.join()

        found = [r for r in results if r is not None]
        if found:
            # most edges first, then the lexicographically smallest edge list
            best_count, edges = min(found, key=lambda r: (-r[0], r[1]))
        else:
            logger.warning(f"{spec}: no chain produced a path-unique subgraph")
            best_count, edges = 0, ()
        return SearchOutcome(
            spec=spec,
            best_count=best_count,
            witness=EdgeSet(spec, frozenset(edges)),
            method=SearchMethod.ANNEAL,
            seed=config.seed,
            iterations=config.iterations * config.restarts,
            exact=False,
            config=config,
            rng_algorithm=RNG_ALGORITHM,
            statistics=self.statistics.get_anneal_stats(),
            elapsed_seconds=time.perf_counter() - started,
        )


def anneal_gamma(spec: GraphSpec, config: Optional[AnnealConfig] = None) -> SearchOutcome:
    """
    Lower bound on gamma(q, d) by upper-triangle annealing

    Args:
        spec: Graph spec
        config: Schedule, default from settings

    Returns:
        SearchOutcome with a verified-by-construction witness
    """
    return AnnealSearch(config).run(spec)
