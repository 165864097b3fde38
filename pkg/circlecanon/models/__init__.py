from .node import NodeKindTag, VertexRole
from .tree import GraphLabeledTree
from .rooted import RootedTree

__all__ = [
    "NodeKindTag",
    "VertexRole",
    "GraphLabeledTree",
    "RootedTree",
]
