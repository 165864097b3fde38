"""DOT emission of graph-labeled trees.

Every node becomes a ``cluster_<node>`` subgraph labeled with its kind. Original vertices
are circles labeled ``v<global id>``, markers are double circles labeled ``m<id>``. Normal
edges are solid; tree edges run between clusters and are dashed.
"""
from typing import Dict, List

from ..models.tree import GraphLabeledTree


class DotWriter:
    """Undirected DOT graph built from lines"""

    def __init__(self, name: str = "split_tree"):
        self.name = name
        self.clusters: List[List[str]] = []
        self.edges: List[str] = []

    @staticmethod
    def _unpack(attributes: Dict[str, str]) -> str:
        return ", ".join(f'{key}="{value}"' for key, value in attributes.items())

    def cluster(self, name: str, label: str) -> List[str]:
        lines = [f"subgraph cluster_{name} {{", f'  label="{label}";']
        self.clusters.append(lines)
        return lines

    def node(self, lines: List[str], identifier: str, **attributes: str) -> None:
        lines.append(f'  "{identifier}" [{self._unpack(attributes)}];')

    def edge(self, lines: List[str], a: str, b: str, **attributes: str) -> None:
        suffix = f" [{self._unpack(attributes)}]" if attributes else ""
        lines.append(f'  "{a}" -- "{b}"{suffix};')

    def render(self) -> str:
        out = [f"graph {self.name} {{"]
        for lines in self.clusters:
            out.extend(f"  {line}" for line in lines)
            out.append("  }")
        out.extend(f"  {line}" for line in self.edges)
        out.append("}")
        return "\n".join(out) + "\n"


def _kind_label(tree: GraphLabeledTree, node: int) -> str:
    kind = tree.kinds.get(node)
    if kind is None:
        return f"node {node}"
    return f"node {node}: {kind.tag.value.lower()}"


def tree_to_dot(t: GraphLabeledTree) -> str:
    """DOT source of a graph-labeled tree, deterministic for a given tree"""
    writer = DotWriter()

    def name(v: int) -> str:
        return f"m{v}" if t.is_marker(v) else f"v{t.global_id[v]}"

    for node in t.nodes:
        lines = writer.cluster(str(node), _kind_label(t, node))
        vertices = sorted(t.node_vertices[node])
        for v in vertices:
            if t.is_marker(v):
                writer.node(lines, name(v), shape="doublecircle", label=name(v))
            else:
                writer.node(lines, name(v), shape="circle", label=name(v))
        for u in vertices:
            for w in sorted(t.adjacency[u]):
                if u < w:
                    writer.edge(lines, name(u), name(w))
    for u, v in t.tree_edges():
        writer.edges.append(f'"{name(u)}" -- "{name(v)}" [style="dashed"];')
    return writer.render()
