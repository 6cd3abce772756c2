"""
Lower Bound Comparison
Which construction gives more edges on B(q, 2)
"""

from core.graph import GraphSpec
from constructions.construction1 import construction1_count
from constructions.construction2 import construction2_count


def compare_lower_bounds(q: int) -> int:
    """
    Sign of construction2_count(q) - construction1_count(q, d=2)

    Returns:
        1 when construction 2 is larger, 0 on a tie, -1 otherwise
    """
    difference = construction2_count(q) - construction1_count(GraphSpec(q, 2))
    return (difference > 0) - (difference < 0)


def best_construction_count(spec: GraphSpec) -> int:
    """Largest edge count either construction reaches on spec"""
    count = construction1_count(spec)
    if spec.d == 2:
        count = max(count, construction2_count(spec.q))
    return count
