"""
Bound Tables
Reference table rows, asymptotic series and their CSV rendering
"""

import csv
import io
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from core.graph import GraphSpec
from bounds.closed_forms import (
    construction2_limit, lower_limit_fixed_d, relative_bounds, upper_limit_fixed_d,
)
from bounds.report import ABSENT, CSV_HEADER, bounds_report

logger = logging.getLogger(__name__)

# (q, d) pairs of the reference table
TABLE_SPECS: Tuple[Tuple[int, int], ...] = (
    tuple((2, d) for d in range(2, 10))
    + tuple((3, d) for d in range(2, 7))
    + tuple((4, d) for d in range(2, 6))
    + tuple((5, d) for d in range(2, 4))
)

ASYMPTOTIC_DIMENSIONS = range(2, 10)
ASYMPTOTICS_HEADER = ["d", "lb_thm3", "lb_thm4", "ub_thm5"]
RELATIVE_HEADER = ["q", "d", "lb_thm3", "lb_thm4", "ub_thm5"]


@dataclass(frozen=True)
class TableRow:
    q: int
    d: int
    lb_comp: Optional[int]
    lb_thm3: int
    lb_thm4: Optional[int]
    ub_thm5: int

    def cells(self) -> List[str]:
        values = [self.q, self.d, self.lb_comp, self.lb_thm3, self.lb_thm4, self.ub_thm5]
        return [ABSENT if v is None else str(v) for v in values]


def table_rows(q_filter: Optional[int] = None,
               search: Optional[Callable[[GraphSpec], int]] = None) -> List[TableRow]:
    """
    Build the reference table

    Args:
        q_filter: Keep only rows with this alphabet size
        search: Called per row for the computed lower bound; the column
            stays absent without it

    Returns:
        Rows in table order
    """
    rows = []
    for q, d in TABLE_SPECS:
        if q_filter is not None and q != q_filter:
            continue
        spec = GraphSpec(q, d)
        lb_comp = search(spec) if search is not None else None
        report = bounds_report(spec, lb_search=lb_comp)
        rows.append(TableRow(q, d, lb_comp, report.lb_construction1,
                             report.lb_construction2, report.ub_theorem5))
        logger.debug(f"Table row {spec}: {rows[-1].cells()}")
    return rows


def format_ratio(value: Optional[Fraction]) -> str:
    """Fixed six-decimal rendering, '-' when absent"""
    if value is None:
        return ABSENT
    return f"{float(value):.6f}"


def asymptotic_rows(dimensions: Iterable[int] = ASYMPTOTIC_DIMENSIONS) -> List[List[str]]:
    """Large-q limits of the relative bounds, one row per dimension"""
    rows = []
    for d in dimensions:
        lb4 = construction2_limit() if d == 2 else None
        rows.append([str(d), format_ratio(lower_limit_fixed_d(d)), format_ratio(lb4),
                     format_ratio(upper_limit_fixed_d(d))])
    return rows


def relative_rows(specs: Iterable[Tuple[int, int]]) -> List[List[str]]:
    """Relative bounds gamma / q^(d+1) for each (q, d)"""
    rows = []
    for q, d in specs:
        ratios = relative_bounds(q, d)
        rows.append([str(q), str(d), format_ratio(ratios['lb_thm3']),
                     format_ratio(ratios['lb_thm4']), format_ratio(ratios['ub_thm5'])])
    return rows


def render_csv(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    """CSV text with LF line endings"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_table(rows: Iterable[TableRow]) -> str:
    return render_csv(CSV_HEADER, (row.cells() for row in rows))
