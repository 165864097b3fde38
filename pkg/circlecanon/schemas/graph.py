from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field

Edge = Tuple[int, int]

# A sequence of non-negative integers; canonical encodings and their pieces
Encoding = List[int]


class ColoredGraph(BaseModel):
    """Vertex-colored simple graph on vertices 0..vertex_count-1.

    The model only checks field types; graph_service.validate_graph checks the graph
    invariants and reports the first violation.
    """
    model_config = ConfigDict(frozen=True)

    vertex_count: int = Field(..., ge=0)
    edges: List[Edge] = Field(default_factory=list)
    colors: List[int] = Field(default_factory=list)

    @classmethod
    def build(
        cls,
        vertex_count: int,
        edges: Iterable[Sequence[int]] = (),
        colors: Optional[Sequence[int]] = None,
    ) -> "ColoredGraph":
        """Build a graph with edges stored as sorted (u, v) pairs; colors default to 0"""
        normalized = sorted((min(u, v), max(u, v)) for u, v in edges)
        return cls(
            vertex_count=vertex_count,
            edges=normalized,
            colors=list(colors) if colors is not None else [0] * vertex_count,
        )

    @classmethod
    def from_networkx(cls, graph: nx.Graph, colors: Optional[Sequence[int]] = None) -> "ColoredGraph":
        """Import a networkx graph whose nodes are 0..n-1"""
        return cls.build(graph.number_of_nodes(), graph.edges(), colors)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        for v, color in enumerate(self.colors):
            graph.nodes[v]["color"] = color
        graph.add_edges_from(self.edges)
        return graph

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> List[Set[int]]:
        adj: List[Set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    @cached_property
    def edge_set(self) -> FrozenSet[Edge]:
        return frozenset((min(u, v), max(u, v)) for u, v in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def with_colors(self, colors: Sequence[int]) -> "ColoredGraph":
        return self.model_copy(update={"colors": list(colors)})

    def relabel(self, mapping: Dict[int, int]) -> "ColoredGraph":
        """Rename vertices through a bijection old -> new on 0..n-1"""
        colors = [0] * self.vertex_count
        for old, color in enumerate(self.colors):
            colors[mapping[old]] = color
        return ColoredGraph.build(
            self.vertex_count,
            ((mapping[u], mapping[v]) for u, v in self.edges),
            colors,
        )
