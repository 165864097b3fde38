from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .tree import GraphLabeledTree


@dataclass
class RootedTree:
    """A graph-labeled tree rooted at its center, with the working colors of the layer pass.

    ``up_marker[N]`` is N's own marker on the tree edge toward the root and
    ``parent_marker[N]`` its partner inside the parent node.
    """
    tree: GraphLabeledTree
    root: int
    parent: Dict[int, Optional[int]] = field(default_factory=dict)
    children: Dict[int, List[int]] = field(default_factory=dict)
    depth: Dict[int, int] = field(default_factory=dict)
    up_marker: Dict[int, int] = field(default_factory=dict)
    parent_marker: Dict[int, int] = field(default_factory=dict)
    colors: Dict[int, int] = field(default_factory=dict)
    synthetic: Optional[int] = None

    def layers(self) -> List[List[int]]:
        """Nodes grouped by distance from the root, nearest first"""
        result: List[List[int]] = [[] for _ in range(max(self.depth.values()) + 1)]
        for node in sorted(self.depth):
            result[self.depth[node]].append(node)
        return result

    def subtree_nodes(self, node: int) -> List[int]:
        stack = [node]
        result = []
        while stack:
            current = stack.pop()
            result.append(current)
            stack.extend(self.children[current])
        return result
