"""
Closed-Form Bounds
Exact evaluation of the gamma(q, d) bracket and its limits
"""

import logging
import math
from fractions import Fraction
from typing import Dict, Optional, Tuple

from core.combinatorics import binomial
from core.exceptions import RangeViolationError, SpecRejectedError
from core.graph import GraphSpec
from constructions.construction1 import construction1_count
from constructions.construction2 import construction2_count

logger = logging.getLogger(__name__)


def gamma_q1(q: int) -> int:
    """
    Maximum path-unique edge count of B(q, 1)

    Args:
        q: Alphabet size, at least 1

    Returns:
        (q+1)^2/4 for odd q, q(q+2)/4 for even q
    """
    if q < 1:
        raise SpecRejectedError(f"alphabet size q={q} must be at least 1")
    if q % 2:
        return (q + 1) ** 2 // 4
    return q * (q + 2) // 4


def eta_closed_form(q: int, d: int, k: int) -> int:
    """
    Maximum number of length-k walks in B(q, d) through a single edge

    Inclusion-exclusion over placements of i disjoint occurrences of the
    edge word inside a length-(d+k) word.
    """
    check_walk_parameters(q, d, k)
    total = 0
    for i in range(1, (d + k) // (d + 1) + 1):
        term = q ** (d + k - i * (d + 1)) * binomial(k - (i - 1) * d, i)
        total += term if i % 2 else -term
    return total


def check_walk_parameters(q: int, d: int, k: int):
    if q < 2 or d < 1:
        raise SpecRejectedError(f"need q >= 2 and d >= 1, got q={q}, d={d}")
    if k < 1:
        raise RangeViolationError(f"walk length k must be positive, got {k}")


def upper_bound_theorem5_exact(q: int, d: int, k: int) -> Fraction:
    """q^(d+1) - (q^(d+k) - gamma(q^d, 1)) / eta(q, d, k), unfloored"""
    check_walk_parameters(q, d, k)
    walks_allowed = gamma_q1(q ** d)
    return q ** (d + 1) - Fraction(q ** (d + k) - walks_allowed, eta_closed_form(q, d, k))


def upper_bound_theorem5(q: int, d: int, k: int) -> int:
    """Upper bound on gamma(q, d) from walks of length k, floored once"""
    return math.floor(upper_bound_theorem5_exact(q, d, k))


def default_window(d: int) -> range:
    """Walk lengths tried by upper_bound_best: 1 .. 2(d+1)"""
    return range(1, 2 * (d + 1) + 1)


def upper_bound_best(q: int, d: int, window: Optional[range] = None) -> Tuple[int, int]:
    """
    Tightest walk-counting upper bound over a window of walk lengths

    Args:
        q: Alphabet size
        d: Dimension
        window: Walk lengths to try, default 1 .. 2(d+1)

    Returns:
        (bound, k) with the smallest minimizing k
    """
    best: Optional[Tuple[int, int]] = None
    for k in window or default_window(d):
        value = upper_bound_theorem5(q, d, k)
        if best is None or value < best[0]:
            best = (value, k)
    logger.debug(f"Upper bound for B({q},{d}): {best[0]} at k={best[1]}")
    return best


def upper_bound_best_exact(q: int, d: int, window: Optional[range] = None) -> Fraction:
    """Unfloored minimum of the walk-counting bound over the window"""
    return min(upper_bound_theorem5_exact(q, d, k) for k in window or default_window(d))


def corollary3_expressions(q: int, d: int) -> Tuple[Fraction, Fraction, Fraction]:
    """
    Simplified upper bounds at k = d and k = d+1, and their q -> infinity cap

    Returns:
        (bound at k=d, bound at k=d+1, min(1 - 1/(d+1), 1 - 3/(4d)))
    """
    check_walk_parameters(q, d, 1)
    scale = q ** (d + 1)
    at_d = scale * (1 - Fraction(3, 4 * d) + Fraction(1, 2 * d * q ** d))
    at_d1 = scale * (1 - Fraction(1, d + 1)
                     + Fraction(1, 4 * q * (d + 1))
                     + Fraction(1, 2 * (d + 1) * q ** (d + 1))
                     + Fraction(1, 4 * (d + 1) * q ** (2 * d + 1)))
    return at_d, at_d1, upper_limit_fixed_d(d)


def upper_limit_fixed_d(d: int) -> Fraction:
    return min(1 - Fraction(1, d + 1), 1 - Fraction(3, 4 * d))


def lower_limit_fixed_q(q: int) -> Fraction:
    """Limit of construction1_count / q^(d+1) as d grows: (q+1)/(2q)"""
    return Fraction(q + 1, 2 * q)


def lower_limit_fixed_d(d: int) -> Fraction:
    """Limit of construction1_count / q^(d+1) as q grows: 1/2 - 1/(d+1)!"""
    return Fraction(1, 2) - Fraction(1, math.factorial(d + 1))


def construction2_limit() -> Fraction:
    """Leading coefficient of construction2_count / q^3"""
    return Fraction(1, 3)


def corollary2_limits(q: Optional[int] = None, d: Optional[int] = None) -> Fraction:
    """
    Asymptotic lower limit of gamma / q^(d+1), fixing exactly one of q, d

    Raises:
        RangeViolationError: Unless exactly one of q and d is given
    """
    if (q is None) == (d is None):
        raise RangeViolationError("fix exactly one of q and d")
    if q is not None:
        return lower_limit_fixed_q(q)
    return lower_limit_fixed_d(d)


def s_from_gamma(q: int, d: int, gamma_value: int) -> int:
    """
    Minimum number of length-(d+1) labels reaching full capacity

    Raises:
        RangeViolationError: If gamma_value is outside [0, q^(d+1)]
    """
    total = q ** (d + 1)
    if gamma_value < 0 or gamma_value > total:
        raise RangeViolationError(f"gamma value {gamma_value} outside [0, {total}]")
    return total - gamma_value


def s_single_symbol(q: int) -> int:
    """Labels of length 1 reach full capacity only when q-1 of the symbols are labels"""
    return q - 1


def relative_bounds(q: int, d: int) -> Dict[str, Optional[Fraction]]:
    """
    Bounds on gamma(q, d) / q^(d+1) as exact fractions

    The upper bound is the unfloored minimum over the walk-length window.
    """
    scale = q ** (d + 1)
    return {
        'lb_thm3': Fraction(construction1_count(GraphSpec(q, d)), scale),
        'lb_thm4': Fraction(construction2_count(q), scale) if d == 2 else None,
        'ub_thm5': upper_bound_best_exact(q, d) / scale,
    }
