"""
Combinatorics
Exact integer helpers for the counting formulas
"""

import math


def binomial(n: int, k: int) -> int:
    """
    Binomial coefficient that is zero outside the usual range

    C(n, k) is 0 when k < 0, n < 0 or n < k, which keeps the edge-count
    formulas uniform at small alphabet sizes.
    """
    if k < 0 or n < 0 or n < k:
        return 0
    return math.comb(n, k)
