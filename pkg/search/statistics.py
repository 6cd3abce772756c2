"""
Search Statistics
Counters collected while a search runs
"""

import logging
from collections import defaultdict
from threading import Lock
from typing import Dict

logger = logging.getLogger(__name__)


class SearchStatistics:
    """
    Per-run counters

    Branch-and-bound fills the node and prune counters, annealing the
    per-chain records. Safe to update from several chain threads.
    """

    def __init__(self):
        self._lock = Lock()
        self.nodes_expanded = 0
        self.pruned_by_bound = 0
        self.pruned_by_check = 0
        self.incumbent_updates = 0
        self.chains: Dict[int, Dict[str, int]] = {}
        self.totals = defaultdict(int)

        logger.info("Search Statistics initialized")

    def record_node(self):
        self.nodes_expanded += 1

    def record_bound_prune(self):
        self.pruned_by_bound += 1

    def record_check_prune(self):
        self.pruned_by_check += 1

    def record_incumbent(self, count: int):
        self.incumbent_updates += 1
        logger.debug(f"New incumbent with {count} edges")

    def record_chain(self, chain: int, best_count: int, proposals: int, accepted: int, valid_states: int,
                     repair_swaps: int = 0):
        """
        Record the result of one annealing chain

        Args:
            chain: Chain index
            best_count: Best valid edge count, -1 if the chain never was valid
            proposals: Swaps proposed after the starting ordering was repaired
            accepted: Swaps accepted
            valid_states: Accepted swaps whose candidate was path unique
            repair_swaps: Swaps spent making the starting ordering path unique
        """
        with self._lock:
            self.chains[chain] = {
                'best_count': best_count,
                'repair_swaps': repair_swaps,
                'proposals': proposals,
                'accepted': accepted,
                'valid_states': valid_states,
            }
            self.totals['repair_swaps'] += repair_swaps
            self.totals['proposals'] += proposals
            self.totals['accepted'] += accepted
            self.totals['valid_states'] += valid_states

    def get_chain_stats(self, chain: int) -> Dict[str, int]:
        """Get statistics for one chain"""
        record = self.chains.get(chain, {})
        proposals = record.get('proposals', 0)
        accepted = record.get('accepted', 0)
        return dict(record, acceptance_rate=f"{(accepted / proposals * 100) if proposals else 0:.2f}%")

    def get_exhaustive_stats(self) -> Dict[str, int]:
        return {
            'nodes_expanded': self.nodes_expanded,
            'pruned_by_bound': self.pruned_by_bound,
            'pruned_by_check': self.pruned_by_check,
            'incumbent_updates': self.incumbent_updates,
        }

    def get_anneal_stats(self) -> Dict:
        return {
            'repair_swaps': self.totals['repair_swaps'],
            'proposals': self.totals['proposals'],
            'accepted': self.totals['accepted'],
            'valid_states': self.totals['valid_states'],
            'chains': [self.get_chain_stats(chain) for chain in sorted(self.chains)],
        }
