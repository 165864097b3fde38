"""Graph-labeled trees.

Vertices are either originals (carrying the id of a vertex of the decomposed graph) or
markers. Normal edges join vertices of one node; tree edges pair markers of neighboring
nodes. The node partition is stored explicitly and always equals the connected components
of the normal edges.
"""
from collections import deque
from typing import TYPE_CHECKING, Dict, Iterable, List, Optional, Set, Tuple

from ..core.exceptions import TreeStructureError
from ..schemas.graph import ColoredGraph
from .node import VertexRole

if TYPE_CHECKING:
    from ..schemas.split import NodeKind


class GraphLabeledTree:
    def __init__(self):
        self.role: Dict[int, VertexRole] = {}
        self.global_id: Dict[int, int] = {}
        self.adjacency: Dict[int, Set[int]] = {}
        self.tree_partner: Dict[int, int] = {}
        self.node_of: Dict[int, int] = {}
        self.node_vertices: Dict[int, Set[int]] = {}
        # kinds are filled in by decomposition and kept current by joins
        self.kinds: Dict[int, "NodeKind"] = {}
        self._next_vertex = 0
        self._next_node = 0

    @classmethod
    def from_graph(cls, g: ColoredGraph) -> "GraphLabeledTree":
        """Single-node tree whose vertex v is the original vertex v"""
        tree = cls()
        node = tree.new_node()
        for v in range(g.vertex_count):
            tree.add_vertex(node, VertexRole.ORIGINAL, global_id=v)
        for u, v in g.edges:
            tree.add_normal_edge(u, v)
        return tree

    def copy(self) -> "GraphLabeledTree":
        other = GraphLabeledTree()
        other.role = dict(self.role)
        other.global_id = dict(self.global_id)
        other.adjacency = {v: set(nbrs) for v, nbrs in self.adjacency.items()}
        other.tree_partner = dict(self.tree_partner)
        other.node_of = dict(self.node_of)
        other.node_vertices = {node: set(vs) for node, vs in self.node_vertices.items()}
        other.kinds = dict(self.kinds)
        other._next_vertex = self._next_vertex
        other._next_node = self._next_node
        return other

    # construction

    def new_node(self) -> int:
        node = self._next_node
        self._next_node += 1
        self.node_vertices[node] = set()
        return node

    def add_vertex(self, node: int, role: VertexRole, global_id: Optional[int] = None) -> int:
        v = self._next_vertex
        self._next_vertex += 1
        self.role[v] = role
        if role == VertexRole.ORIGINAL:
            if global_id is None:
                raise TreeStructureError("original vertices need a global id")
            self.global_id[v] = global_id
        self.adjacency[v] = set()
        self.node_of[v] = node
        self.node_vertices[node].add(v)
        return v

    def add_normal_edge(self, u: int, v: int) -> None:
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)

    def add_tree_edge(self, u: int, v: int) -> None:
        if u in self.tree_partner or v in self.tree_partner:
            raise TreeStructureError(f"marker {u} or {v} already has a tree edge")
        self.tree_partner[u] = v
        self.tree_partner[v] = u

    def remove_vertex(self, v: int) -> None:
        for w in self.adjacency.pop(v):
            self.adjacency[w].discard(v)
        partner = self.tree_partner.pop(v, None)
        if partner is not None:
            self.tree_partner.pop(partner, None)
        self.node_vertices[self.node_of.pop(v)].discard(v)
        self.role.pop(v)
        self.global_id.pop(v, None)

    # queries

    @property
    def nodes(self) -> List[int]:
        return sorted(self.node_vertices)

    @property
    def vertex_count(self) -> int:
        return len(self.role)

    @property
    def normal_edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency.values()) // 2

    @property
    def size(self) -> int:
        """Vertices plus normal and tree edges"""
        return self.vertex_count + self.normal_edge_count + len(self.tree_partner) // 2

    def is_marker(self, v: int) -> bool:
        return self.role[v] == VertexRole.MARKER

    def originals(self) -> List[int]:
        return sorted(v for v, role in self.role.items() if role == VertexRole.ORIGINAL)

    def markers_of(self, node: int) -> List[int]:
        return sorted(v for v in self.node_vertices[node] if self.role[v] == VertexRole.MARKER)

    def tree_edges(self) -> List[Tuple[int, int]]:
        return sorted((u, v) for u, v in self.tree_partner.items() if u < v)

    def neighbor_nodes(self, node: int) -> List[Tuple[int, int, int]]:
        """(marker in node, partner marker, neighbor node) for every tree edge at node"""
        result = []
        for m in self.markers_of(node):
            partner = self.tree_partner[m]
            result.append((m, partner, self.node_of[partner]))
        return result

    def node_graph(self, node: int) -> Tuple[ColoredGraph, List[int]]:
        """The node as a graph on local indices; local index i is vertex ids[i]"""
        ids = sorted(self.node_vertices[node])
        index = {v: i for i, v in enumerate(ids)}
        edges = [
            (index[u], index[w]) for u in ids for w in self.adjacency[u] if u < w
        ]
        return ColoredGraph.build(len(ids), edges), ids

    # invariants

    def validate(self) -> None:
        """Raise TreeStructureError unless every graph-labeled tree invariant holds"""
        for u, v in self.tree_partner.items():
            if self.tree_partner.get(v) != u:
                raise TreeStructureError(f"tree edge {u}-{v} is not symmetric")
            if not (self.is_marker(u) and self.is_marker(v)):
                raise TreeStructureError(f"tree edge {u}-{v} touches an original vertex")
            if self.node_of[u] == self.node_of[v]:
                raise TreeStructureError(f"tree edge {u}-{v} lies inside node {self.node_of[u]}")
        for v, role in self.role.items():
            if role == VertexRole.MARKER and v not in self.tree_partner:
                raise TreeStructureError(f"marker {v} has no tree edge")
            for w in self.adjacency[v]:
                if self.node_of[w] != self.node_of[v]:
                    raise TreeStructureError(f"normal edge {v}-{w} joins two nodes")

        for node, vertices in self.node_vertices.items():
            if not vertices:
                raise TreeStructureError(f"node {node} is empty")
            start = next(iter(vertices))
            seen = {start}
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self.adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            if seen != vertices:
                raise TreeStructureError(f"node {node} is not connected by normal edges")

        node_count = len(self.node_vertices)
        if len(self.tree_partner) // 2 != node_count - 1:
            raise TreeStructureError(
                f"{node_count} nodes joined by {len(self.tree_partner) // 2} tree edges is not a tree"
            )
        if node_count:
            start = next(iter(self.node_vertices))
            seen_nodes = {start}
            queue = deque([start])
            while queue:
                node = queue.popleft()
                for _, _, other in self.neighbor_nodes(node):
                    if other not in seen_nodes:
                        seen_nodes.add(other)
                        queue.append(other)
            if len(seen_nodes) != node_count:
                raise TreeStructureError("node-incidence graph is disconnected")

    # split and join, in place

    def split_node(self, node: int, y_side: Iterable[int], a: Iterable[int], b: Iterable[int]) -> Tuple[int, int]:
        """Move ``y_side`` into a new node and link the halves by a fresh tree edge.

        ``a`` are the X-side vertices with neighbors across the cut, ``b`` the Y-side ones.
        Returns the new markers (m_A, m_B).
        """
        y_side = set(y_side)
        other = self.new_node()
        for v in y_side:
            self.node_vertices[node].discard(v)
            self.node_vertices[other].add(v)
            self.node_of[v] = other
        for u in y_side:
            for w in list(self.adjacency[u]):
                if w not in y_side:
                    self.adjacency[u].discard(w)
                    self.adjacency[w].discard(u)
        m_a = self.add_vertex(node, VertexRole.MARKER)
        m_b = self.add_vertex(other, VertexRole.MARKER)
        for v in a:
            self.add_normal_edge(m_a, v)
        for v in b:
            self.add_normal_edge(m_b, v)
        self.add_tree_edge(m_a, m_b)
        self.kinds.pop(node, None)
        return m_a, m_b

    def join(self, m_a: int, m_b: int) -> int:
        """Merge the two nodes of tree edge m_a-m_b; returns the surviving node"""
        if self.tree_partner.get(m_a) != m_b:
            raise TreeStructureError(f"{m_a}-{m_b} is not a tree edge")
        keep, gone = sorted((self.node_of[m_a], self.node_of[m_b]))
        left = set(self.adjacency[m_a])
        right = set(self.adjacency[m_b])
        self.remove_vertex(m_a)
        self.remove_vertex(m_b)
        for v in list(self.node_vertices[gone]):
            self.node_of[v] = keep
            self.node_vertices[keep].add(v)
        del self.node_vertices[gone]
        for u in left:
            for v in right:
                self.add_normal_edge(u, v)
        self.kinds.pop(keep, None)
        self.kinds.pop(gone, None)
        return keep

    def subdivide(self, m_a: int, m_b: int) -> int:
        """Insert a node of two adjacent markers on the tree edge m_a-m_b"""
        if self.tree_partner.get(m_a) != m_b:
            raise TreeStructureError(f"{m_a}-{m_b} is not a tree edge")
        del self.tree_partner[m_a]
        del self.tree_partner[m_b]
        node = self.new_node()
        s_a = self.add_vertex(node, VertexRole.MARKER)
        s_b = self.add_vertex(node, VertexRole.MARKER)
        self.add_normal_edge(s_a, s_b)
        self.add_tree_edge(m_a, s_a)
        self.add_tree_edge(s_b, m_b)
        return node
