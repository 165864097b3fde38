from .dot import tree_to_dot
from .formats import (
    format_encoding,
    format_graph,
    format_rep,
    parse_encoding,
    parse_graph,
    parse_input,
    parse_rep,
)

__all__ = [
    "tree_to_dot",
    "format_encoding",
    "format_graph",
    "format_rep",
    "parse_encoding",
    "parse_graph",
    "parse_input",
    "parse_rep",
]
