"""
Serialization
Edge-list text, structured JSON and DOT renderings of edge sets
"""

import json
import logging
from enum import Enum
from typing import Dict, List, Optional, Union

from core.exceptions import (
    DeBruijnError, MalformedInputError, SpecRejectedError, UnsupportedParameterError,
)
from core.graph import EdgeSet, GraphSpec, edge_endpoints, format_word

logger = logging.getLogger(__name__)


class EdgeFormat(Enum):
    """Interchange formats for edge sets"""
    EDGELIST = "edgelist"
    JSON = "json"
    DOT = "dot"


# Graphviz colour names for construction edge colours
DOT_COLORS = {
    "Blue": "blue",
    "Red": "red",
    "Black": "black",
    "Green": "forestgreen",
    "Purple": "purple",
}


def _label(value) -> str:
    return str(getattr(value, "value", value))


def to_edge_list(edges: EdgeSet) -> str:
    """
    Header line "q=<q> d=<d>" then one edge word per line, sorted by index

    Args:
        edges: Edge set to render

    Returns:
        Text ending in a newline
    """
    lines = [f"q={edges.spec.q} d={edges.spec.d}"]
    lines.extend(format_word(word, " ") for word in edges.words())
    return "\n".join(lines) + "\n"


def _parse_header(line: str, line_number: int) -> GraphSpec:
    fields: Dict[str, int] = {}
    for token in line.split():
        key, sep, value = token.partition("=")
        if not sep or key not in ("q", "d"):
            raise MalformedInputError(f"expected header 'q=<q> d=<d>', got {line!r}", line_number)
        if key in fields:
            raise MalformedInputError(f"header repeats {key}: {line!r}", line_number)
        try:
            fields[key] = int(value)
        except ValueError:
            raise MalformedInputError(f"non-integer {key} in header: {value!r}", line_number)
    if set(fields) != {"q", "d"}:
        raise MalformedInputError(f"header must name both q and d, got {line!r}", line_number)
    try:
        return GraphSpec(fields["q"], fields["d"])
    except SpecRejectedError as exc:
        raise MalformedInputError(str(exc), line_number)


def from_edge_list(text: str) -> EdgeSet:
    """
    Parse edge-list text

    Blank lines and lines starting with '#' are ignored. Digits may be
    separated by spaces or written contiguously when q <= 10.

    Args:
        text: Edge-list document

    Returns:
        Parsed EdgeSet

    Raises:
        MalformedInputError: On a bad header, a bad word, a symbol >= q
            or a duplicate edge; the message names the line
    """
    spec: Optional[GraphSpec] = None
    members: Dict[int, int] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if spec is None:
            spec = _parse_header(line, line_number)
            continue
        tokens = line.split()
        if len(tokens) == 1 and spec.q <= 10:
            tokens = list(tokens[0])
        try:
            word = [int(t) for t in tokens]
        except ValueError:
            raise MalformedInputError(f"edge word must be digits, got {line!r}", line_number)
        if len(word) != spec.d + 1:
            raise MalformedInputError(
                f"edge word must have {spec.d + 1} symbols, got {len(word)}", line_number)
        for symbol in word:
            if symbol < 0 or symbol >= spec.q:
                raise MalformedInputError(f"symbol {symbol} is outside alphabet [0, {spec.q})", line_number)
        index = spec.edge_index(word)
        if index in members:
            raise MalformedInputError(
                f"duplicate edge {format_word(word)} (first seen on line {members[index]})", line_number)
        members[index] = line_number
    if spec is None:
        raise MalformedInputError("missing header 'q=<q> d=<d>'")
    logger.debug(f"Parsed {len(members)} edges of {spec}")
    return EdgeSet(spec, frozenset(members))


def to_record(edges: EdgeSet) -> Dict:
    """Structured record {q, d, edges[, colors, blocks]}"""
    record: Dict = {"q": edges.spec.q, "d": edges.spec.d, "edges": sorted(edges.edges)}
    if edges.is_annotated():
        record["colors"] = {str(e): _label(c) for e, c in sorted(edges.edge_colors.items())}
    if edges.vertex_blocks is not None:
        record["blocks"] = {
            str(v): {"block": b.block, "part": _label(b.part)}
            for v, b in sorted(edges.vertex_blocks.items())
        }
    return record


def from_record(record: Dict) -> EdgeSet:
    """
    Rebuild an EdgeSet from its structured record

    Raises:
        MalformedInputError: On missing keys, bad types or duplicate edges
    """
    try:
        spec = GraphSpec(int(record["q"]), int(record["d"]))
        indices = [int(e) for e in record["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad edge record: {exc}")
    if len(set(indices)) != len(indices):
        raise MalformedInputError("edge record lists a duplicate edge")
    try:
        return EdgeSet(spec, frozenset(indices))
    except DeBruijnError as exc:
        raise MalformedInputError(str(exc))


def to_json(edges: EdgeSet) -> str:
    return json.dumps(to_record(edges), indent=2, sort_keys=True) + "\n"


def from_json(text: str) -> EdgeSet:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInputError(f"invalid JSON: {exc.msg}", exc.lineno)
    if not isinstance(record, dict):
        raise MalformedInputError("edge record must be a JSON object")
    return from_record(record)


def to_dot(edges: EdgeSet, name: str = "G") -> str:
    """
    DOT digraph with one node per vertex and one arc per member edge

    Annotated edge sets group vertices into one cluster per block, with
    top and bottom parts on separate ranks, and colour each arc.
    """
    spec = edges.spec
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=circle];"]
    blocks = edges.vertex_blocks
    if blocks:
        by_block: Dict[int, Dict[str, List[int]]] = {}
        for vertex, annotation in sorted(blocks.items()):
            by_block.setdefault(annotation.block, {}).setdefault(_label(annotation.part), []).append(vertex)
        for block, parts in sorted(by_block.items()):
            lines.append(f"  subgraph cluster_{block} {{")
            lines.append(f'    label="block {block}";')
            for part, vertices in sorted(parts.items()):
                nodes = " ".join(f"v{v}" for v in vertices)
                lines.append(f"    {{ rank=same; {nodes}; }}  // {part}")
            lines.append("  }")
    for vertex in range(spec.vertex_count):
        lines.append(f'  v{vertex} [label="{format_word(spec.vertex_word(vertex))}"];')
    for edge in edges:
        source, target = edge_endpoints(spec, edge)
        attributes = [f'label="{format_word(spec.edge_word(edge))}"']
        if edges.is_annotated() and edge in edges.edge_colors:
            colour = _label(edges.edge_colors[edge])
            attributes.append(f"color={DOT_COLORS.get(colour, colour.lower())}")
        lines.append(f"  v{source} -> v{target} [{', '.join(attributes)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize(edges: EdgeSet, fmt: Union[EdgeFormat, str] = EdgeFormat.EDGELIST) -> str:
    """
    Render an edge set in one of the interchange formats

    Args:
        edges: Edge set
        fmt: EdgeFormat or its name

    Returns:
        Rendered text
    """
    fmt = EdgeFormat(fmt)
    if fmt is EdgeFormat.EDGELIST:
        return to_edge_list(edges)
    if fmt is EdgeFormat.JSON:
        return to_json(edges)
    return to_dot(edges)


def deserialize(text: str, fmt: Union[EdgeFormat, str] = EdgeFormat.EDGELIST) -> EdgeSet:
    """
    Parse an edge set from edge-list or JSON text

    Raises:
        MalformedInputError: On unparsable input
        UnsupportedParameterError: For DOT, which is export only
    """
    fmt = EdgeFormat(fmt)
    if fmt is EdgeFormat.EDGELIST:
        return from_edge_list(text)
    if fmt is EdgeFormat.JSON:
        return from_json(text)
    raise UnsupportedParameterError("DOT is an export-only format")
