"""
Labeling Capacity
Distinct labeling outputs by full enumeration and the finite-n rate
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from config.settings import get_settings
from core.exceptions import GuardExceededError, RangeViolationError
from core.graph import encode_word, word_table
from labeling.model import LabelSet

logger = logging.getLogger(__name__)

CHUNK_ROWS = 1 << 20


def _rank_table(labels: LabelSet) -> np.ndarray:
    """rank of every length-m word by its base-q code, 0 for non-labels"""
    table = np.zeros(labels.q ** labels.m, dtype=np.int64)
    for rank, label in enumerate(labels, start=1):
        table[encode_word(label, labels.q)] = rank
    return table


def _unique_outputs(outputs: np.ndarray, alphabet: int) -> np.ndarray:
    """Distinct rows of an output block, as int64 codes when they fit or as raw bytes"""
    width = outputs.shape[1]
    if width * math.log2(alphabet) < 63:
        weights = alphabet ** np.arange(width - 1, -1, -1, dtype=np.int64)
        return np.unique(outputs @ weights)
    dtype = np.uint8 if alphabet <= 256 else np.uint16
    rows = np.ascontiguousarray(outputs.astype(dtype))
    return np.unique(rows.view(np.dtype((np.void, rows.dtype.itemsize * width))).ravel())


def count_distinct_labelings(q: int, n: int, labels: LabelSet, max_states: Optional[int] = None) -> int:
    """
    Number of distinct labeling sequences over all q^n inputs

    Args:
        q: Alphabet size (must match the label set)
        n: Input length
        labels: Label set
        max_states: Enumeration guard, default from settings

    Returns:
        |{ L_A(x) : x of length n }|

    Raises:
        GuardExceededError: If q^n exceeds the guard
    """
    if n < 1:
        raise RangeViolationError(f"input length must be positive, got {n}")
    if q != labels.q:
        raise RangeViolationError(f"label set is over q={labels.q}, not q={q}")
    limit = get_settings().labeling_max_states if max_states is None else max_states
    total = q ** n
    if total > limit:
        logger.warning(f"Refusing to enumerate {total} inputs of length {n}")
        raise GuardExceededError("labeling enumeration", total, limit)

    windows = n - labels.m + 1
    if windows < 1 or len(labels) == 0:
        return 1
    table = _rank_table(labels)
    alphabet = len(labels) + 1
    distinct = None
    for start in range(0, total, CHUNK_ROWS):
        words = word_table(q, n, start, min(start + CHUNK_ROWS, total))
        codes = np.zeros((words.shape[0], windows), dtype=np.int64)
        for offset in range(labels.m):
            codes = codes * q + words[:, offset:offset + windows]
        block = _unique_outputs(table[codes], alphabet)
        distinct = block if distinct is None else np.union1d(distinct, block)
    logger.debug(f"q={q} n={n} |A|={len(labels)}: {len(distinct)} distinct outputs")
    return int(len(distinct))


def empirical_rate(q: int, n_max: int, labels: LabelSet, n_min: Optional[int] = None,
                   max_states: Optional[int] = None) -> List[Tuple[int, float]]:
    """
    Finite-n capacity proxy log2(count) / n for n = m .. n_max

    Args:
        q: Alphabet size
        n_max: Largest input length
        labels: Label set
        n_min: First input length, default m
        max_states: Enumeration guard

    Returns:
        List of (n, rate)
    """
    first = labels.m if n_min is None else n_min
    limit = get_settings().labeling_max_states if max_states is None else max_states
    if q ** n_max > limit:
        raise GuardExceededError("labeling enumeration", q ** n_max, limit)
    series = []
    for n in range(first, n_max + 1):
        count = count_distinct_labelings(q, n, labels, limit)
        series.append((n, math.log2(count) / n))
    return series
