from .graph import ColoredGraph, Edge, Encoding
from .chord import CircleRep, LambdaWord
from .split import Split, NodeKind
from .canon import CanonInput

__all__ = [
    "ColoredGraph",
    "Edge",
    "Encoding",
    "CircleRep",
    "LambdaWord",
    "Split",
    "NodeKind",
    "CanonInput",
]
