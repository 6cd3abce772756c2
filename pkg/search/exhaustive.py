"""
Exhaustive Search
Branch-and-bound over edge subsets for the exact value of gamma(q, d)
"""

import logging
import time
from typing import List, Optional

import numpy as np

from config.settings import get_settings
from core.graph import EdgeSet, GraphSpec, edge_endpoints
from constructions.construction1 import construction1
from constructions.construction2 import construction2
from constructions.compare import best_construction_count
from puniq.checker import PathUniquenessChecker
from search.base import SearchStrategy
from search.budget import NodeBudget
from search.outcome import SearchMethod, SearchOutcome
from search.statistics import SearchStatistics
from search.symmetry import orbit_minimal

logger = logging.getLogger(__name__)


def branching_order(spec: GraphSpec) -> List[int]:
    """Non-loop edges first, then loops, each group by index"""
    loops = []
    others = []
    for edge in range(spec.edge_count):
        source, target = edge_endpoints(spec, edge)
        (loops if source == target else others).append(edge)
    return others + loops


class ExhaustiveSearch(SearchStrategy):
    """
    Depth-first branch-and-bound

    Edges are decided in branching order, include before exclude. A
    branch is cut when the included edges stop being path unique (no
    superset can recover) or when even taking every remaining edge
    cannot beat the incumbent.
    """

    name = "exhaustive"

    def __init__(self, budget: Optional[int] = None, symmetry: bool = False,
                 seed_incumbent: bool = True):
        """
        Initialize exhaustive search

        Args:
            budget: Node expansion limit, default from settings
            symmetry: Restrict the first included edge to orbit minima
            seed_incumbent: Start from the best construction
        """
        self.budget_limit = budget if budget is not None else get_settings().search_budget
        self.symmetry = symmetry
        self.seed_incumbent = seed_incumbent

        logger.info(f"Exhaustive Search initialized (budget {self.budget_limit}, symmetry {symmetry})")

    def _initial_incumbent(self, spec: GraphSpec, checker: PathUniquenessChecker) -> EdgeSet:
        target = best_construction_count(spec)
        candidate = construction1(spec)
        if len(candidate) < target:
            candidate = construction2(spec.q)
        if len(candidate) != target or not checker.check(candidate.mask()):
            logger.warning(f"{spec}: construction with {target} edges rejected, starting from the empty graph")
            return EdgeSet(spec)
        return EdgeSet(spec, candidate.edges)

    def run(self, spec: GraphSpec) -> SearchOutcome:
        """
        Run the search to completion or until the budget runs out

        Args:
            spec: Graph spec, q^(d+1) around 32 edges or fewer

        Returns:
            SearchOutcome, exact when the tree was fully explored
        """
        started = time.perf_counter()
        self.spec = spec
        self.order = branching_order(spec)
        self.checker = PathUniquenessChecker(spec)
        self.budget = NodeBudget(self.budget_limit)
        self.statistics = SearchStatistics()
        self.mask = np.zeros(spec.edge_count, dtype=np.uint8)
        self.allowed_first = None
        if self.symmetry:
            rank = np.empty(spec.edge_count, dtype=np.int64)
            rank[self.order] = np.arange(spec.edge_count)
            self.allowed_first = orbit_minimal(spec, rank)

        incumbent = EdgeSet(spec)
        if self.seed_incumbent:
            incumbent = self._initial_incumbent(spec, self.checker)
        self.best_count = len(incumbent)
        self.best_mask = incumbent.mask()
        logger.debug(f"{spec}: starting incumbent {self.best_count} edges")

        self._expand(0, 0)

        exhausted = self.budget.is_exhausted()
        if exhausted:
            logger.warning(f"{spec}: budget exhausted, best so far {self.best_count} is not proven optimal")
        witness = EdgeSet.from_mask(spec, self.best_mask)
        stats = self.statistics.get_exhaustive_stats()
        stats['checks'] = self.checker.total_checks
        return SearchOutcome(
            spec=spec,
            best_count=self.best_count,
            witness=witness,
            method=SearchMethod.EXHAUSTIVE,
            seed=0,
            iterations=self.budget.used,
            exact=not exhausted,
            budget_exhausted=exhausted,
            statistics=stats,
            elapsed_seconds=time.perf_counter() - started,
        )

    def _expand(self, position: int, included: int):
        if not self.budget.consume():
            return
        self.statistics.record_node()
        if included > self.best_count:
            self.best_count = included
            self.best_mask = self.mask.copy()
            self.statistics.record_incumbent(included)
        remaining = len(self.order) - position
        if included + remaining <= self.best_count:
            self.statistics.record_bound_prune()
            return

        edge = self.order[position]
        first_blocked = (self.allowed_first is not None and included == 0
                         and not self.allowed_first[edge])
        if not first_blocked:
            self.mask[edge] = 1
            if self.checker.check(self.mask):
                self._expand(position + 1, included + 1)
            else:
                self.statistics.record_check_prune()
            self.mask[edge] = 0
            if self.budget.is_exhausted():
                return
        self._expand(position + 1, included)


def exhaustive_gamma(spec: GraphSpec, budget: Optional[int] = None, symmetry: bool = False) -> SearchOutcome:
    """
    Exact gamma(q, d) by branch-and-bound

    Args:
        spec: Graph spec
        budget: Node expansion limit, default from settings
        symmetry: Enable symmetry reduction

    Returns:
        SearchOutcome; exact=False with the best so far if the budget ran out
    """
    return ExhaustiveSearch(budget=budget, symmetry=symmetry).run(spec)
