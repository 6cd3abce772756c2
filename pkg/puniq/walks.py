"""
Walk Counting
Saturating adjacency powers and the matrix-power path-uniqueness check
"""

import logging
from typing import Optional

from core.exceptions import RangeViolationError
from core.graph import EdgeSet, GraphSpec
from core.matrix import DEFAULT_CAP, CountMatrix, adjacency_matrix

logger = logging.getLogger(__name__)


def count_walks(edges: EdgeSet, k: int, cap: Optional[int] = DEFAULT_CAP) -> CountMatrix:
    """
    Number of length-k walks between every ordered vertex pair

    Args:
        edges: Edge subset of B(q, d)
        k: Walk length, at least 1
        cap: Saturation cap, None for exact counts

    Returns:
        CountMatrix whose (u, v) entry is min(cap, #walks u -> v)
    """
    if k < 1:
        raise RangeViolationError(f"walk length must be positive, got {k}")
    return adjacency_matrix(edges, cap).power(k)


def max_power_bound(spec: GraphSpec) -> int:
    """Horizon q^(2d): a shortest witness never needs more steps than there are vertex pairs"""
    return spec.vertex_count ** 2


def is_path_unique_by_powers(edges: EdgeSet) -> bool:
    """
    Matrix-power decision: every power A^k up to the horizon is 0/1

    Stops early once a saturated power repeats, since the sequence is
    periodic from there on.

    Args:
        edges: Edge subset of B(q, d)

    Returns:
        True if no saturated power has an entry of 2
    """
    adjacency = adjacency_matrix(edges, cap=2)
    horizon = max_power_bound(edges.spec)
    seen = set()
    power = adjacency
    for k in range(1, horizon + 1):
        if not power.is_binary():
            logger.debug(f"{edges!r}: power {k} has a repeated walk")
            return False
        key = power.fingerprint()
        if key in seen:
            logger.debug(f"{edges!r}: saturated powers cycle after {k} steps")
            return True
        seen.add(key)
        power = power @ adjacency
    return True
