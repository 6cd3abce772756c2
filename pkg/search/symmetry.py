"""
Symmetry Reduction
Automorphisms of B(q, d) that preserve path-uniqueness
"""

import logging
from itertools import permutations

import numpy as np

from core.exceptions import UnsupportedParameterError
from core.graph import GraphSpec, word_table

logger = logging.getLogger(__name__)

MAX_SYMMETRY_ALPHABET = 6


def edge_images(spec: GraphSpec) -> np.ndarray:
    """
    Image of every edge under every symmetry

    Symbol relabelling maps B(q, d) onto itself. Reversing every edge
    word maps it onto its transpose, which has the same walk counts with
    rows and columns swapped. Both therefore keep path-unique sets path
    unique and preserve edge counts.

    Returns:
        int64 array of shape (2 * q!, q^(d+1)); row g maps edge e to row[e]
    """
    if spec.q > MAX_SYMMETRY_ALPHABET:
        raise UnsupportedParameterError(
            f"symmetry reduction enumerates q! relabellings; q={spec.q} exceeds {MAX_SYMMETRY_ALPHABET}")
    digits = word_table(spec.q, spec.d + 1)
    weights = spec.q ** np.arange(spec.d, -1, -1, dtype=np.int64)
    images = []
    for relabel in permutations(range(spec.q)):
        mapped = np.asarray(relabel, dtype=np.int64)[digits]
        images.append(mapped @ weights)
        images.append(mapped[:, ::-1] @ weights)
    logger.debug(f"{len(images)} symmetries of {spec}")
    return np.vstack(images)


def orbit_minimal(spec: GraphSpec, rank: np.ndarray) -> np.ndarray:
    """
    Which edges have the smallest rank within their orbit

    Any edge set can be mapped by some symmetry to a set whose
    lowest-ranked edge is orbit-minimal, so a branch-and-bound may
    demand that of its first included edge.

    Args:
        spec: Graph spec
        rank: rank[e] = position of edge e in the branching order

    Returns:
        bool array indexed by edge
    """
    images = edge_images(spec)
    return rank[images].min(axis=0) == rank
