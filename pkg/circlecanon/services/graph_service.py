import logging
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from ..core.exceptions import DisconnectedGraphError, GraphValidationError
from ..schemas.graph import ColoredGraph

logger = logging.getLogger(__name__)


class GraphService:
    """Colored-graph plumbing shared by every layer"""

    @staticmethod
    def validate_graph(g: ColoredGraph, *, dense_colors: bool = False) -> None:
        """Raise GraphValidationError on the first violated graph invariant.

        With ``dense_colors`` every color must also lie in 0..n-1, as node canonization
        requires.
        """
        n = g.vertex_count
        if len(g.colors) != n:
            raise GraphValidationError(
                f"color count mismatch: {len(g.colors)} colors for {n} vertices",
                {"colors": len(g.colors), "vertex_count": n},
            )
        seen = set()
        for u, v in g.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge {u}-{v} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphValidationError(f"duplicate edge {key[0]}-{key[1]}")
            seen.add(key)
        for v, color in enumerate(g.colors):
            if color < 0:
                raise GraphValidationError(f"vertex {v} has negative color {color}")
            if dense_colors and color >= n:
                raise GraphValidationError(f"vertex {v} has color {color} outside 0..{n - 1}")

    @staticmethod
    def is_connected(g: ColoredGraph) -> bool:
        if g.vertex_count == 0:
            return True
        return nx.is_connected(g.to_networkx())

    @staticmethod
    def require_connected(g: ColoredGraph, operation: str) -> None:
        if not GraphService.is_connected(g):
            raise DisconnectedGraphError(f"{operation} requires a connected graph")

    @staticmethod
    def induced_subgraph(g: ColoredGraph, vertices: Sequence[int]) -> ColoredGraph:
        """Subgraph on ``vertices``, relabeled so that vertices[i] becomes i"""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v]) for u, v in g.edges if u in index and v in index
        ]
        return ColoredGraph.build(len(vertices), edges, [g.colors[v] for v in vertices])

    @staticmethod
    def connected_components(g: ColoredGraph) -> List[Tuple[ColoredGraph, List[int]]]:
        """Components as induced subgraphs with their global ids in increasing order.

        Components are listed by their smallest vertex.
        """
        components = [sorted(c) for c in nx.connected_components(g.to_networkx())]
        components.sort(key=lambda c: c[0])
        logger.debug(f"graph with {g.vertex_count} vertices has {len(components)} components")
        return [(GraphService.induced_subgraph(g, c), c) for c in components]

    @staticmethod
    def disjoint_union(graphs: Sequence[ColoredGraph]) -> ColoredGraph:
        offset = 0
        edges: List[Tuple[int, int]] = []
        colors: List[int] = []
        for graph in graphs:
            edges.extend((u + offset, v + offset) for u, v in graph.edges)
            colors.extend(graph.colors)
            offset += graph.vertex_count
        return ColoredGraph.build(offset, edges, colors)

    @staticmethod
    def permute(g: ColoredGraph, permutation: Sequence[int]) -> ColoredGraph:
        """Relabel vertex v as permutation[v]"""
        mapping: Dict[int, int] = {v: permutation[v] for v in range(g.vertex_count)}
        return g.relabel(mapping)


graph_service = GraphService()

validate_graph = graph_service.validate_graph
connected_components = graph_service.connected_components
induced_subgraph = graph_service.induced_subgraph
disjoint_union = graph_service.disjoint_union
