"""
Construction 2
Denser path-unique subgraph of B(q, 2) with coloured edges and block layout
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Sequence

from core.combinatorics import binomial
from core.exceptions import SpecRejectedError, UnsupportedParameterError
from core.graph import EdgeSet, GraphSpec, validate_word

logger = logging.getLogger(__name__)


class EdgeColor(Enum):
    """One colour per membership condition"""
    BLUE = "Blue"      # x1 = x2 = x3
    RED = "Red"        # 0 < x1 = x2 < x3
    BLACK = "Black"    # x1 > x2 <= x3
    GREEN = "Green"    # 0 = x1 < x2 <= x3
    PURPLE = "Purple"  # q-1 = x1 > x2 > x3 > 0


class Part(Enum):
    TOP = "Top"
    BOTTOM = "Bottom"


@dataclass(frozen=True)
class BlockAnnotation:
    """Vertex (x1, x2) sits in block min(x1, x2), top part iff x1 > x2"""
    block: int
    part: Part


def edge_color(q: int, word: Sequence[int]) -> Optional[EdgeColor]:
    """
    Which membership condition a triple meets

    Args:
        q: Alphabet size
        word: Edge word (x1, x2, x3)

    Returns:
        The colour of the condition, or None for a non-member
    """
    if len(word) != 3:
        raise UnsupportedParameterError(f"construction 2 edges have 3 symbols, got {len(word)}")
    x1, x2, x3 = validate_word(word, q)
    if x1 == x2 == x3:
        return EdgeColor.BLUE
    if 0 < x1 == x2 < x3:
        return EdgeColor.RED
    if x1 > x2 and x2 <= x3:
        return EdgeColor.BLACK
    if 0 == x1 < x2 <= x3:
        return EdgeColor.GREEN
    if q - 1 == x1 > x2 > x3 > 0:
        return EdgeColor.PURPLE
    return None


def block_annotation(vertex_word: Sequence[int]) -> BlockAnnotation:
    x1, x2 = vertex_word
    return BlockAnnotation(min(x1, x2), Part.TOP if x1 > x2 else Part.BOTTOM)


def construction2(q: int, d: int = 2) -> EdgeSet:
    """
    Build the coloured construction on B(q, 2)

    Args:
        q: Alphabet size, at least 2
        d: Dimension; only 2 is defined

    Returns:
        EdgeSet annotated with edge colours and vertex blocks

    Raises:
        UnsupportedParameterError: If d != 2
    """
    if d != 2:
        raise UnsupportedParameterError(f"construction 2 is defined for d=2 only, got d={d}")
    if q < 2:
        raise SpecRejectedError(f"alphabet size q={q} must be at least 2")
    spec = GraphSpec(q, 2)
    colors: Dict[int, EdgeColor] = {}
    for edge in range(spec.edge_count):
        color = edge_color(q, spec.edge_word(edge))
        if color is not None:
            colors[edge] = color
    blocks = {v: block_annotation(spec.vertex_word(v)) for v in range(spec.vertex_count)}
    logger.debug(f"Construction 2 on {spec}: {len(colors)} edges")
    return EdgeSet(spec, frozenset(colors), edge_colors=colors, vertex_blocks=blocks)


def construction2_count(q: int) -> int:
    """q + C(q-1,2) + 2C(q,2) + 2C(q,3) + C(q,2) + C(q-2,2), i.e. q^3/3 + 3q^2/2 - 23q/6 + 4"""
    return (q + binomial(q - 1, 2) + 2 * binomial(q, 2) + 2 * binomial(q, 3)
            + binomial(q, 2) + binomial(q - 2, 2))


def color_counts(edges: EdgeSet) -> Dict[str, int]:
    """Number of member edges per colour"""
    counts = {color.value: 0 for color in EdgeColor}
    for color in (edges.edge_colors or {}).values():
        counts[color.value] += 1
    return counts
