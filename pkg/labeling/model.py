"""
Labeling Model
Label sets, labeling sequences and their link to de Bruijn subgraphs
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from core.exceptions import MalformedInputError, RangeViolationError, SymbolOutOfRangeError
from core.graph import EdgeSet, GraphSpec, Word, build_full_graph, validate_word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabelSet:
    """
    Distinct q-ary labels of one length m, kept in lexicographic order

    The label at 1-based position j of that order is reported as j in
    labeling sequences.
    """
    q: int
    m: int
    labels: Tuple[Word, ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise RangeViolationError(f"label length must be positive, got {self.m}")
        words = []
        for label in self.labels:
            word = validate_word(label, self.q)
            if len(word) != self.m:
                raise SymbolOutOfRangeError(f"label {word} does not have length {self.m}")
            words.append(word)
        ordered = tuple(sorted(set(words)))
        if len(ordered) != len(words):
            raise MalformedInputError("label set contains a duplicate label")
        object.__setattr__(self, "labels", ordered)
        object.__setattr__(self, "_ranks", {label: j for j, label in enumerate(ordered, start=1)})

    def rank(self, label: Sequence[int]) -> int:
        """1-based lexicographic rank, 0 if not a label"""
        return self._ranks.get(tuple(label), 0)

    def ranks(self) -> Dict[Word, int]:
        return dict(self._ranks)

    def __len__(self):
        return len(self.labels)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.labels)

    def __contains__(self, label):
        return tuple(label) in self._ranks


@dataclass(frozen=True)
class LabelingSequence:
    """Output of the labeling channel: one symbol in {0, ..., |A|} per input position"""
    symbols: Tuple[int, ...]

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]


def label_sequence(x: Sequence[int], labels: LabelSet) -> LabelingSequence:
    """
    Mark every position where a label starts

    Position i (1-based) gets the rank of the label equal to the window
    x[i .. i+m-1] when i <= n-m+1; every later position is 0.

    Args:
        x: Input word of length n >= 1
        labels: Label set

    Returns:
        LabelingSequence of length n

    Raises:
        SymbolOutOfRangeError: If x has a symbol outside the alphabet
    """
    word = validate_word(x, labels.q)
    n = len(word)
    if n < 1:
        raise RangeViolationError("input word must not be empty")
    m = labels.m
    symbols = [labels.rank(word[i:i + m]) for i in range(max(n - m + 1, 0))]
    symbols.extend([0] * (n - len(symbols)))
    return LabelingSequence(tuple(symbols))


def label_set_from_subgraph(edges: EdgeSet) -> LabelSet:
    """Labels of length d+1: every edge word the subgraph leaves out"""
    spec = edges.spec
    missing = (spec.edge_word(e) for e in range(spec.edge_count) if e not in edges.edges)
    return LabelSet(spec.q, spec.d + 1, tuple(missing))


def subgraph_from_label_set(labels: LabelSet) -> EdgeSet:
    """
    Edge subset of B(q, m-1) made of every length-m word that is not a label

    Raises:
        RangeViolationError: If m < 2
    """
    if labels.m < 2:
        raise RangeViolationError(f"labels of length {labels.m} do not correspond to a de Bruijn graph")
    spec = GraphSpec(labels.q, labels.m - 1)
    removed = [spec.edge_index(label) for label in labels]
    return build_full_graph(spec).without_edges(removed)


def parse_label_lines(lines: Iterable[str], q: int, m: Optional[int] = None) -> LabelSet:
    """
    Read one label per line

    Digits are separated by spaces, or written contiguously when q <= 10.
    Blank lines and lines starting with '#' are skipped.

    Args:
        lines: Text lines
        q: Alphabet size
        m: Expected label length, default the length of the first label

    Returns:
        LabelSet

    Raises:
        MalformedInputError: With the offending line number
    """
    labels = []
    seen: Dict[Word, int] = {}
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 1 and q <= 10:
            tokens = list(tokens[0])
        try:
            word = tuple(int(t) for t in tokens)
        except ValueError:
            raise MalformedInputError(f"label must be digits, got {line!r}", line_number)
        if any(s < 0 or s >= q for s in word):
            raise MalformedInputError(f"label {line!r} has a symbol outside [0, {q})", line_number)
        if m is None:
            m = len(word)
        if len(word) != m:
            raise MalformedInputError(f"label has {len(word)} symbols, expected {m}", line_number)
        if word in seen:
            raise MalformedInputError(f"duplicate label (first on line {seen[word]})", line_number)
        seen[word] = line_number
        labels.append(word)
    logger.debug(f"Parsed {len(labels)} labels over q={q}")
    return LabelSet(q, m or 1, tuple(labels))
