"""
Bounds Report
Lower and upper estimates of gamma(q, d) for one graph
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from core.exceptions import BoundsInconsistentError
from core.graph import GraphSpec
from constructions.construction1 import construction1_count
from constructions.construction2 import construction2_count
from bounds.closed_forms import upper_bound_best

logger = logging.getLogger(__name__)

CSV_HEADER = ["q", "d", "lb_comp", "lb_thm3", "lb_thm4", "ub_thm5"]
ABSENT = "-"


@dataclass(frozen=True)
class BoundsReport:
    spec: GraphSpec
    lb_construction1: int
    lb_construction2: Optional[int]
    ub_theorem5: int
    ub_k_used: int
    lb_search: Optional[int] = None

    def to_record(self) -> Dict[str, Any]:
        return {
            'q': self.spec.q,
            'd': self.spec.d,
            'lb_search': self.lb_search,
            'lb_construction1': self.lb_construction1,
            'lb_construction2': self.lb_construction2,
            'ub_theorem5': self.ub_theorem5,
            'ub_k_used': self.ub_k_used,
        }

    def csv_row(self) -> List[str]:
        """Cells in table column order, absent values as '-'"""
        cells = [self.spec.q, self.spec.d, self.lb_search, self.lb_construction1,
                 self.lb_construction2, self.ub_theorem5]
        return [ABSENT if cell is None else str(cell) for cell in cells]


def bounds_report(spec: GraphSpec, lb_search: Optional[int] = None,
                  window: Optional[range] = None) -> BoundsReport:
    """
    Collect construction lower bounds and the best walk-counting upper bound

    Args:
        spec: Graph spec
        lb_search: Edge count found by a search run, if any
        window: Walk lengths for the upper bound, default 1 .. 2(d+1)

    Returns:
        BoundsReport

    Raises:
        BoundsInconsistentError: If any lower bound exceeds the upper bound
    """
    upper, k_used = upper_bound_best(spec.q, spec.d, window)
    report = BoundsReport(
        spec=spec,
        lb_construction1=construction1_count(spec),
        lb_construction2=construction2_count(spec.q) if spec.d == 2 else None,
        ub_theorem5=upper,
        ub_k_used=k_used,
        lb_search=lb_search,
    )
    for name, value in (("construction 1", report.lb_construction1),
                        ("construction 2", report.lb_construction2),
                        ("search", report.lb_search)):
        if value is not None and value > upper:
            logger.error(f"{spec}: {name} lower bound {value} exceeds upper bound {upper}")
            raise BoundsInconsistentError(f"{spec}: {name} lower bound {value} exceeds upper bound {upper} "
                                          f"(k={k_used})")
    return report
