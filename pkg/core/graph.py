"""
de Bruijn Graph
Alphabet words, graph specs and edge subsets of B(q, d)
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import IndexOutOfRangeError, SpecRejectedError, SymbolOutOfRangeError

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]

# q^(d+1) must stay inside signed 64-bit index arithmetic
MAX_EDGE_COUNT = 2 ** 62


def validate_word(word: Sequence[int], q: int) -> Word:
    """
    Check that every symbol lies in [0, q)

    Args:
        word: Sequence of symbols
        q: Alphabet size

    Returns:
        The word as a tuple

    Raises:
        SymbolOutOfRangeError: If a symbol is outside the alphabet
    """
    symbols = tuple(int(s) for s in word)
    for position, symbol in enumerate(symbols):
        if symbol < 0 or symbol >= q:
            raise SymbolOutOfRangeError(
                f"symbol {symbol} at position {position} is outside alphabet [0, {q})")
    return symbols


def encode_word(word: Sequence[int], q: int) -> int:
    """Most-significant-symbol-first base-q value of a word"""
    value = 0
    for symbol in validate_word(word, q):
        value = value * q + symbol
    return value


def decode_word(index: int, q: int, length: int) -> Word:
    """
    Inverse of encode_word for a fixed word length

    Raises:
        IndexOutOfRangeError: If index is not in [0, q^length)
    """
    if index < 0 or index >= q ** length:
        raise IndexOutOfRangeError(f"index {index} outside [0, {q ** length})")
    symbols = [0] * length
    for position in range(length - 1, -1, -1):
        index, symbols[position] = divmod(index, q)
    return tuple(symbols)


def word_table(q: int, length: int, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
    """
    Digits of the words with index in [start, stop), one row per word

    Args:
        q: Alphabet size
        length: Word length
        start: First word index
        stop: End index, default q^length

    Returns:
        int64 array of shape (stop - start, length)
    """
    stop = q ** length if stop is None else stop
    weights = q ** np.arange(length - 1, -1, -1, dtype=np.int64)
    indices = np.arange(start, stop, dtype=np.int64)
    return (indices[:, None] // weights[None, :]) % q


def format_word(word: Sequence[int], separator: str = "") -> str:
    """Render a word as its digits"""
    return separator.join(str(s) for s in word)


@dataclass(frozen=True)
class GraphSpec:
    """
    Identifies the de Bruijn graph B(q, d)

    Vertices are the q^d words of length d, edges the q^(d+1) words of
    length d+1, both indexed by their base-q value so that index order is
    lexicographic order.
    """
    q: int
    d: int

    def __post_init__(self):
        if not isinstance(self.q, (int, np.integer)) or not isinstance(self.d, (int, np.integer)):
            raise SpecRejectedError(f"q and d must be integers, got q={self.q!r}, d={self.d!r}")
        if self.q < 2:
            raise SpecRejectedError(f"alphabet size q={self.q} must be at least 2")
        if self.d < 1:
            raise SpecRejectedError(f"dimension d={self.d} must be at least 1")
        if int(self.q) ** (int(self.d) + 1) > MAX_EDGE_COUNT:
            raise SpecRejectedError(
                f"B({self.q},{self.d}) has {self.q}^{self.d + 1} edges, beyond the supported 2^62")
        object.__setattr__(self, "q", int(self.q))
        object.__setattr__(self, "d", int(self.d))

    @property
    def vertex_count(self) -> int:
        return self.q ** self.d

    @property
    def edge_count(self) -> int:
        return self.q ** (self.d + 1)

    def vertex_word(self, vertex: int) -> Word:
        return decode_word(vertex, self.q, self.d)

    def edge_word(self, edge: int) -> Word:
        return decode_word(edge, self.q, self.d + 1)

    def vertex_index(self, word: Sequence[int]) -> int:
        if len(word) != self.d:
            raise SymbolOutOfRangeError(f"vertex word must have length {self.d}, got {len(word)}")
        return encode_word(word, self.q)

    def edge_index(self, word: Sequence[int]) -> int:
        if len(word) != self.d + 1:
            raise SymbolOutOfRangeError(f"edge word must have length {self.d + 1}, got {len(word)}")
        return encode_word(word, self.q)

    def successors(self, vertex: int) -> List[int]:
        """Out-neighbours of a vertex in the full graph, ascending"""
        base = (vertex * self.q) % self.vertex_count
        return [base + s for s in range(self.q)]

    def __str__(self):
        return f"B({self.q},{self.d})"


def edge_endpoints(spec: GraphSpec, edge_index: int) -> Tuple[int, int]:
    """
    Prefix and suffix vertex of an edge

    Edge u*q + s runs from vertex u to vertex (u*q mod q^d) + s.

    Args:
        spec: Graph spec
        edge_index: Edge index in [0, q^(d+1))

    Returns:
        (source vertex index, target vertex index)
    """
    if edge_index < 0 or edge_index >= spec.edge_count:
        raise IndexOutOfRangeError(f"edge index {edge_index} outside [0, {spec.edge_count})")
    source, last = divmod(edge_index, spec.q)
    target = (source * spec.q) % spec.vertex_count + last
    return source, target


def walk_to_word(spec: GraphSpec, vertices: Sequence[int]) -> Word:
    """
    Sequence of a vertex walk: first vertex word, then each later vertex's last symbol

    Raises:
        IndexOutOfRangeError: If consecutive vertices are not adjacent in B(q, d)
    """
    if not vertices:
        return ()
    symbols = list(spec.vertex_word(vertices[0]))
    for previous, current in zip(vertices, vertices[1:]):
        if current not in spec.successors(previous):
            raise IndexOutOfRangeError(f"vertices {previous} -> {current} are not adjacent")
        symbols.append(current % spec.q)
    return tuple(symbols)


def word_to_walk(spec: GraphSpec, word: Sequence[int]) -> List[int]:
    """Vertices visited by the walk spelled by a word of length >= d"""
    symbols = validate_word(word, spec.q)
    if len(symbols) < spec.d:
        raise SymbolOutOfRangeError(f"a walk word needs at least {spec.d} symbols")
    return [spec.vertex_index(symbols[i:i + spec.d]) for i in range(len(symbols) - spec.d + 1)]


def word_edges(spec: GraphSpec, word: Sequence[int]) -> List[int]:
    """Edge indices of every (d+1)-window of a word"""
    symbols = validate_word(word, spec.q)
    width = spec.d + 1
    return [encode_word(symbols[i:i + width], spec.q) for i in range(len(symbols) - width + 1)]


@dataclass(frozen=True)
class EdgeSet:
    """
    Edge-induced subgraph of B(q, d)

    Membership is a frozenset of edge indices. Construction outputs may
    attach per-edge colors and per-vertex block annotations; those ride
    along for export and do not take part in equality.
    """
    spec: GraphSpec
    edges: frozenset = frozenset()
    edge_colors: Optional[Mapping[int, Any]] = field(default=None, compare=False, repr=False)
    vertex_blocks: Optional[Mapping[int, Any]] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        members = frozenset(int(e) for e in self.edges)
        for edge in members:
            if edge < 0 or edge >= self.spec.edge_count:
                raise IndexOutOfRangeError(f"edge index {edge} outside [0, {self.spec.edge_count})")
        object.__setattr__(self, "edges", members)

    @classmethod
    def from_words(cls, spec: GraphSpec, words: Iterable[Sequence[int]]) -> "EdgeSet":
        return cls(spec, frozenset(spec.edge_index(w) for w in words))

    @classmethod
    def from_mask(cls, spec: GraphSpec, mask: np.ndarray) -> "EdgeSet":
        return cls(spec, frozenset(int(e) for e in np.flatnonzero(mask)))

    def __len__(self):
        return len(self.edges)

    def __contains__(self, edge: int):
        return edge in self.edges

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.edges))

    def words(self) -> List[Word]:
        """Member edge words in index (lexicographic) order"""
        return [self.spec.edge_word(e) for e in self]

    def mask(self) -> np.ndarray:
        """uint8 membership vector indexed by edge index"""
        mask = np.zeros(self.spec.edge_count, dtype=np.uint8)
        if self.edges:
            mask[np.fromiter(self.edges, dtype=np.int64, count=len(self.edges))] = 1
        return mask

    def complement(self) -> "EdgeSet":
        return EdgeSet(self.spec, frozenset(range(self.spec.edge_count)) - self.edges)

    def with_edges(self, extra: Iterable[int]) -> "EdgeSet":
        return EdgeSet(self.spec, self.edges | frozenset(extra))

    def without_edges(self, removed: Iterable[int]) -> "EdgeSet":
        return EdgeSet(self.spec, self.edges - frozenset(removed))

    def is_annotated(self) -> bool:
        return self.edge_colors is not None

    def loop_count(self) -> int:
        count = 0
        for edge in self.edges:
            source, target = edge_endpoints(self.spec, edge)
            count += source == target
        return count

    def get_stats(self) -> Dict[str, Any]:
        """Get edge set statistics"""
        return {
            'graph': str(self.spec),
            'edges': len(self.edges),
            'loops': self.loop_count(),
            'missing': self.spec.edge_count - len(self.edges),
            'density': f"{len(self.edges) / self.spec.edge_count:.4f}",
        }

    def __repr__(self):
        return f"EdgeSet({self.spec}, edges={len(self.edges)})"


def build_full_graph(spec: GraphSpec) -> EdgeSet:
    """
    All q^(d+1) edges of B(q, d)

    Args:
        spec: Graph spec (validated on construction)

    Returns:
        EdgeSet containing every edge
    """
    logger.debug(f"Building full graph {spec} with {spec.edge_count} edges")
    return EdgeSet(spec, frozenset(range(spec.edge_count)))
