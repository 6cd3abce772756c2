"""
Pattern Occurrence Counting
Brute-force and automaton counts of words containing a pattern
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config.settings import get_settings
from core.exceptions import GuardExceededError, RangeViolationError
from core.graph import GraphSpec, Word, encode_word, validate_word, word_table
from bounds.closed_forms import check_walk_parameters

logger = logging.getLogger(__name__)


def _all_words(q: int, length: int, max_words: Optional[int]) -> np.ndarray:
    limit = get_settings().eta_max_words if max_words is None else max_words
    total = q ** length
    if total > limit:
        logger.warning(f"Refusing to enumerate {total} words of length {length} over q={q}")
        raise GuardExceededError("pattern enumeration", total, limit)
    return word_table(q, length)


def _window_codes(words: np.ndarray, q: int, width: int) -> np.ndarray:
    """Base-q code of every width-window of every word, shape (words, windows)"""
    length = words.shape[1]
    codes = np.zeros((words.shape[0], length - width + 1), dtype=np.int64)
    for offset in range(width):
        codes = codes * q + words[:, offset:offset + codes.shape[1]]
    return codes


def eta_oracle(q: int, d: int, k: int, pattern: Sequence[int], max_words: Optional[int] = None) -> int:
    """
    Count length-(d+k) words containing pattern, by enumeration

    Args:
        q: Alphabet size
        d: Dimension
        k: Walk length
        pattern: Word of length d+1
        max_words: Enumeration guard, default from settings

    Returns:
        Number of words holding pattern as a contiguous subword

    Raises:
        GuardExceededError: If q^(d+k) exceeds the guard
    """
    check_walk_parameters(q, d, k)
    if len(pattern) != d + 1:
        raise RangeViolationError(f"pattern must have {d + 1} symbols, got {len(pattern)}")
    target = encode_word(pattern, q)
    codes = _window_codes(_all_words(q, d + k, max_words), q, d + 1)
    return int(np.count_nonzero(np.any(codes == target, axis=1)))


def eta_oracle_counts(q: int, d: int, k: int, max_words: Optional[int] = None) -> np.ndarray:
    """Containing-word count for every pattern at once, indexed by pattern code"""
    check_walk_parameters(q, d, k)
    codes = np.sort(_window_codes(_all_words(q, d + k, max_words), q, d + 1), axis=1)
    first = np.ones(codes.shape, dtype=bool)
    first[:, 1:] = codes[:, 1:] != codes[:, :-1]
    return np.bincount(codes[first], minlength=q ** (d + 1))


def eta_oracle_max(q: int, d: int, k: int, max_words: Optional[int] = None) -> Tuple[int, Word]:
    """
    Largest containing-word count over all patterns

    Returns:
        (count, lexicographically first maximizing pattern)
    """
    counts = eta_oracle_counts(q, d, k, max_words)
    best = int(np.argmax(counts))
    return int(counts[best]), GraphSpec(q, d).edge_word(best)


def autocorrelation(pattern: Sequence[int]) -> Tuple[int, ...]:
    """Overlap indicator per shift j: 1 when the pattern suffix from j equals its prefix"""
    symbols = tuple(pattern)
    length = len(symbols)
    return tuple(int(symbols[j:] == symbols[:length - j]) for j in range(length))


def _prefix_function(pattern: Word) -> List[int]:
    failure = [0] * len(pattern)
    matched = 0
    for i in range(1, len(pattern)):
        while matched and pattern[i] != pattern[matched]:
            matched = failure[matched - 1]
        if pattern[i] == pattern[matched]:
            matched += 1
        failure[i] = matched
    return failure


def count_words_containing(q: int, pattern: Sequence[int], length: int) -> int:
    """
    Exact number of length-`length` words over q symbols containing pattern

    Dynamic programme over the matching automaton: state j means the
    longest pattern prefix ending here has j symbols; reaching the full
    pattern is absorbing and those words are subtracted from q^length.
    """
    symbols = validate_word(pattern, q)
    m = len(symbols)
    if m == 0:
        return q ** length
    failure = _prefix_function(symbols)
    transitions = [[0] * q for _ in range(m)]
    for state in range(m):
        for symbol in range(q):
            if symbol == symbols[state]:
                transitions[state][symbol] = state + 1
            elif state:
                transitions[state][symbol] = transitions[failure[state - 1]][symbol]
    avoiding = [1] + [0] * (m - 1)
    for _ in range(length):
        step = [0] * m
        for state, ways in enumerate(avoiding):
            if not ways:
                continue
            for nxt in transitions[state]:
                if nxt < m:
                    step[nxt] += ways
        avoiding = step
    return q ** length - sum(avoiding)


def eta_exact(q: int, d: int, k: int) -> int:
    """
    Maximum of count_words_containing over all patterns of length d+1

    The count depends on the pattern only through its autocorrelation,
    so one representative per autocorrelation is evaluated.
    """
    check_walk_parameters(q, d, k)
    spec = GraphSpec(q, d)
    by_overlap: Dict[Tuple[int, ...], int] = {}
    for index in range(spec.edge_count):
        pattern = spec.edge_word(index)
        key = autocorrelation(pattern)
        if key not in by_overlap:
            by_overlap[key] = count_words_containing(q, pattern, d + k)
    logger.debug(f"eta({q},{d},{k}): {len(by_overlap)} autocorrelation classes")
    return max(by_overlap.values())
