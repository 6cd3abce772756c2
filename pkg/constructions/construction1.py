"""
Construction 1
Path-unique subgraph of B(q, d) for every q and d
"""

import logging

import numpy as np

from core.combinatorics import binomial
from core.graph import EdgeSet, GraphSpec, word_table

logger = logging.getLogger(__name__)


def construction1(spec: GraphSpec) -> EdgeSet:
    """
    Edges (x_1, ..., x_{d+1}) with x_1 <= x_2, minus the monotone words
    x_1 <= x_2 <= ... <= x_{d+1} <= q-2

    Args:
        spec: Graph spec

    Returns:
        Path-unique EdgeSet with construction1_count(spec) edges
    """
    digits = word_table(spec.q, spec.d + 1)
    starts_low = digits[:, 0] <= digits[:, 1]
    monotone = np.all(digits[:, :-1] <= digits[:, 1:], axis=1) & (digits[:, -1] <= spec.q - 2)
    members = np.flatnonzero(starts_low & ~monotone)
    logger.debug(f"Construction 1 on {spec}: {len(members)} edges")
    return EdgeSet(spec, frozenset(int(e) for e in members))


def construction1_count(spec: GraphSpec) -> int:
    """
    Edge count (q+1)/(2q) * q^(d+1) - C(d+q-1, d+1)

    (q+1) * q^d is even for every q, so the first term is an integer.
    """
    q, d = spec.q, spec.d
    return (q + 1) * q ** d // 2 - binomial(d + q - 1, d + 1)
