"""
Count Matrices
Saturating walk-count and adjacency matrices over de Bruijn vertices
"""

import logging
from typing import List, Optional

import numpy as np

from core.graph import EdgeSet
from core.exceptions import RangeViolationError

logger = logging.getLogger(__name__)

DEFAULT_CAP = 2


class CountMatrix:
    """
    n x n matrix of non-negative counts, saturating at `cap`

    Saturation min(cap, x) commutes with sums and products of
    non-negative integers, so products of saturated matrices equal the
    saturated exact product. cap=None keeps exact arbitrary-precision
    counts.
    """

    def __init__(self, entries, cap: Optional[int] = DEFAULT_CAP):
        """
        Initialize count matrix

        Args:
            entries: Square array-like of non-negative integers
            cap: Saturation value (>= 1), or None for exact counts
        """
        if cap is not None and cap < 1:
            raise RangeViolationError(f"cap must be at least 1, got {cap}")
        dtype = object if cap is None else np.int64
        array = np.array(entries, dtype=dtype)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise RangeViolationError(f"count matrix must be square, got shape {array.shape}")
        if cap is not None:
            array = np.minimum(array, cap)
        array.setflags(write=False)
        self._entries = array
        self.cap = cap

    @property
    def n(self) -> int:
        return self._entries.shape[0]

    @property
    def entries(self) -> np.ndarray:
        """Read-only view of the entries"""
        return self._entries

    def __getitem__(self, key):
        return self._entries[key]

    def __matmul__(self, other: "CountMatrix") -> "CountMatrix":
        if self.n != other.n:
            raise RangeViolationError(f"size mismatch {self.n} vs {other.n}")
        cap = self.cap if other.cap is None else (other.cap if self.cap is None else min(self.cap, other.cap))
        return CountMatrix(self._entries @ other._entries, cap)

    def power(self, k: int) -> "CountMatrix":
        """k-th power by repeated squaring (k >= 1)"""
        if k < 1:
            raise RangeViolationError(f"power must be positive, got {k}")
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def is_binary(self) -> bool:
        """True when every entry is 0 or 1"""
        return bool(np.all(self._entries <= 1))

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self._entries))

    def total(self) -> int:
        return int(sum(int(x) for x in self._entries.flat))

    def row_sums(self) -> List[int]:
        return [int(sum(int(x) for x in row)) for row in self._entries]

    def column_sums(self) -> List[int]:
        return [int(sum(int(x) for x in col)) for col in self._entries.T]

    def to_list(self) -> List[List[int]]:
        return [[int(x) for x in row] for row in self._entries]

    def fingerprint(self) -> bytes:
        """Byte key of the entries, for cycle detection in power sequences"""
        return np.asarray(self._entries, dtype=np.int64).tobytes()

    def __eq__(self, other):
        if not isinstance(other, CountMatrix):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._entries, other._entries))

    def __hash__(self):
        return hash(self.fingerprint())

    def __repr__(self):
        return f"CountMatrix(n={self.n}, cap={self.cap}, ones={self.nonzero_count()})"


def adjacency_matrix(edges: EdgeSet, cap: Optional[int] = DEFAULT_CAP) -> CountMatrix:
    """
    0/1 adjacency matrix of an edge set, vertices in lexicographic order

    Args:
        edges: Edge subset of B(q, d)
        cap: Saturation cap carried into later products

    Returns:
        CountMatrix of side q^d
    """
    spec = edges.spec
    n = spec.vertex_count
    array = np.zeros((n, n), dtype=np.int64)
    if edges.edges:
        members = np.fromiter(edges.edges, dtype=np.int64, count=len(edges.edges))
        sources = members // spec.q
        targets = (sources * spec.q) % n + members % spec.q
        array[sources, targets] = 1
    return CountMatrix(array, cap)
