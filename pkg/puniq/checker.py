"""
Path Uniqueness Checker
Decides whether an edge subset of B(q, d) admits at most one walk of each length between any two vertices
"""

import logging
from dataclasses import dataclass
from threading import Lock
from typing import Dict, List, Optional, Tuple

import numpy as np

from core.graph import EdgeSet, GraphSpec, Word, walk_to_word
from puniq.kernels import allocate_workspace, find_reconvergence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathUniqVerdict:
    """
    Outcome of a path-uniqueness decision

    A failing verdict carries a shortest witness: two distinct words of
    equal length, every (d+1)-window a member edge, sharing their first d
    and last d symbols.
    """
    is_path_unique: bool
    witness: Optional[Tuple[Word, Word]] = None

    def __bool__(self):
        return self.is_path_unique


class PathUniquenessChecker:
    """
    Reusable checker bound to one graph spec

    Holds the pair-graph workspaces so repeated checks (searches run
    millions of them) allocate nothing. One instance serves one thread
    at a time.
    """

    def __init__(self, spec: GraphSpec):
        """
        Initialize checker

        Args:
            spec: Graph spec whose edge masks will be checked
        """
        self.spec = spec
        self.n = spec.vertex_count
        self.visited, self.parent, self.queue = allocate_workspace(self.n)
        self.total_checks = 0
        self.failed_checks = 0
        self.lock = Lock()

        logger.info(f"Path Uniqueness Checker initialized for {spec}")

    def _run(self, mask: np.ndarray) -> Optional[Tuple[List[int], List[int]]]:
        """Run the kernel; the two vertex walks of a witness, or None"""
        mask = np.ascontiguousarray(mask, dtype=np.uint8)
        with self.lock:
            pair, vertex = find_reconvergence(
                mask, self.spec.q, self.n, self.visited, self.parent, self.queue)
            self.total_checks += 1
            if pair < 0:
                return None
            self.failed_checks += 1
            return self._rebuild_walks(int(pair), int(vertex))

    def _rebuild_walks(self, pair: int, vertex: int) -> Tuple[List[int], List[int]]:
        firsts: List[int] = []
        seconds: List[int] = []
        current = pair
        while current >= 0:
            firsts.append(current // self.n)
            seconds.append(current % self.n)
            current = int(self.parent[current])
        start = -current - 1
        firsts.reverse()
        seconds.reverse()
        return [start] + firsts + [vertex], [start] + seconds + [vertex]

    def check(self, mask: np.ndarray) -> bool:
        """
        Check a membership mask

        Args:
            mask: uint8 vector of length q^(d+1)

        Returns:
            True if the masked edge set is path unique
        """
        return self._run(mask) is None

    def verdict(self, mask: np.ndarray) -> PathUniqVerdict:
        """Check a mask and build the witness words on failure"""
        walks = self._run(mask)
        if walks is None:
            return PathUniqVerdict(True)
        first, second = walks
        witness = (walk_to_word(self.spec, first), walk_to_word(self.spec, second))
        logger.debug(f"{self.spec} not path unique, witness length {len(witness[0])}")
        return PathUniqVerdict(False, witness)

    def get_stats(self) -> Dict:
        """Get checker statistics"""
        return {
            'graph': str(self.spec),
            'total_checks': self.total_checks,
            'failed_checks': self.failed_checks,
            'passed_checks': self.total_checks - self.failed_checks,
        }


def is_path_unique(edges: EdgeSet) -> PathUniqVerdict:
    """
    Decide path-uniqueness of an edge set

    Args:
        edges: Edge subset of B(q, d)

    Returns:
        PathUniqVerdict with a shortest witness when the answer is no
    """
    if not edges.edges:
        return PathUniqVerdict(True)
    checker = PathUniquenessChecker(edges.spec)
    return checker.verdict(edges.mask())
