"""Text formats of the command line.

* graph file: ``graph <n> <m>`` then m lines ``<u> <v>`` with 0-based vertex ids
* rep file: ``rep <n>`` then 2n whitespace-separated labels (any non-negative integers)
* encoding: space-separated integers on one line

Blank lines and lines starting with ``#`` are ignored in graph and rep files.
"""
from pathlib import Path
from typing import List, Sequence, Union

from pydantic import ValidationError

from ..core.exceptions import FormatError
from ..schemas.canon import CanonInput
from ..schemas.chord import CircleRep
from ..schemas.graph import ColoredGraph, Encoding
from ..services.chord_service import chord_service
from ..services.graph_service import graph_service

GRAPH_HEADER = "graph"
REP_HEADER = "rep"


def _lines(text: str) -> List[str]:
    return [
        line.strip() for line in text.splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]


def _integers(tokens: Sequence[str], what: str) -> List[int]:
    try:
        values = [int(token) for token in tokens]
    except ValueError:
        raise FormatError(f"{what}: expected integers, got {' '.join(tokens)!r}")
    if any(value < 0 for value in values):
        raise FormatError(f"{what}: negative value")
    return values


def detect_kind(text: str) -> str:
    """Header word of a graph or rep file"""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty input file")
    header = lines[0].split()[0]
    if header not in (GRAPH_HEADER, REP_HEADER):
        raise FormatError(f"unknown header {header!r}; expected '{GRAPH_HEADER}' or '{REP_HEADER}'")
    return header


def parse_graph(text: str) -> ColoredGraph:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty graph file")
    header = lines[0].split()
    if len(header) != 3 or header[0] != GRAPH_HEADER:
        raise FormatError(f"graph header must read 'graph <n> <m>', got {lines[0]!r}")
    n, m = _integers(header[1:], "graph header")
    if len(lines) - 1 != m:
        raise FormatError(f"graph header announces {m} edges, file has {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"edge line must hold two vertex ids, got {line!r}")
        u, v = _integers(tokens, "edge line")
        edges.append((u, v))
    try:
        graph = ColoredGraph.build(n, edges)
    except ValidationError as e:
        raise FormatError(f"invalid graph: {e.errors()[0]['msg']}")
    graph_service.validate_graph(graph)
    return graph


def format_graph(g: ColoredGraph) -> str:
    lines = [f"{GRAPH_HEADER} {g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_rep(text: str) -> CircleRep:
    lines = _lines(text)
    if not lines:
        raise FormatError("empty rep file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != REP_HEADER:
        raise FormatError(f"rep header must read 'rep <n>', got {lines[0]!r}")
    (n,) = _integers(header[1:], "rep header")
    labels = _integers([token for line in lines[1:] for token in line.split()], "rep word")
    if len(labels) != 2 * n:
        raise FormatError(f"rep header announces {n} chords, word has {len(labels)} endpoints")
    return chord_service.parse_rep(labels)


def format_rep(r: CircleRep) -> str:
    return f"{REP_HEADER} {r.chord_count}\n{' '.join(map(str, r.word))}\n"


def parse_input(text: str) -> CanonInput:
    """A graph or rep file, told apart by its header word"""
    if detect_kind(text) == GRAPH_HEADER:
        return CanonInput.of_graph(parse_graph(text))
    return CanonInput.of_rep(parse_rep(text))


def parse_encoding(text: str) -> Encoding:
    lines = _lines(text)
    if len(lines) != 1:
        raise FormatError(f"an encoding is a single line, got {len(lines)}")
    return _integers(lines[0].split(), "encoding")


def format_encoding(e: Encoding) -> str:
    return " ".join(map(str, e)) + "\n"


def read_text(path: Union[str, Path]) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(f"{path}: not UTF-8 text ({e.reason} at byte {e.start})") from e
