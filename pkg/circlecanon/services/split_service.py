"""Split decomposition into graph-labeled trees, reduction to the minimal split tree, and
the join operations that undo it.

Splits are found with an anchored closure. Fix a vertex ``a`` that must have neighbors
across the cut, one such neighbor ``b`` on the far side, and a second seed ``p`` next to
``a``. Two rules then force vertices onto a's side:

* a member not adjacent to ``b`` has no neighbors across the cut, so its neighbors join;
* an outsider adjacent to the side must see every member adjacent to ``b``, otherwise it joins.

The fixpoint is the smallest split side containing ``a`` and ``p`` with ``a``-``b`` crossing
the cut, or it swallows everything but ``b`` when no such split exists.
"""
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..core.config import settings
from ..core.exceptions import InvalidSplitError, TreeStructureError
from ..models.node import NodeKindTag
from ..models.tree import GraphLabeledTree
from ..schemas.graph import ColoredGraph
from ..schemas.split import NodeKind, Split
from .graph_service import graph_service

logger = logging.getLogger(__name__)

Seed = Tuple[int, int, int]


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _masks(g: ColoredGraph) -> List[int]:
    masks = [0] * g.vertex_count
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _anchored_closure(masks: Sequence[int], a: int, b: int, p: int) -> int:
    side = (1 << a) | (1 << p)
    across = masks[b]
    absorbed = 0  # members whose neighborhoods were already pulled in
    reach = 0  # union of the neighborhoods of all members
    scanned = 0
    while True:
        grow = 0
        for v in _bits(side & ~scanned):
            reach |= masks[v]
        scanned = side
        for v in _bits(side & ~across & ~absorbed):
            grow |= masks[v]
        absorbed = side & ~across
        boundary = side & across
        for w in _bits(reach & ~side):
            if masks[w] & boundary != boundary:
                grow |= 1 << w
        grown = side | grow
        if grown == side:
            return side
        side = grown


def _degenerate_kind(g: ColoredGraph) -> Optional[NodeKind]:
    n, m = g.vertex_count, g.edge_count
    if n < 2:
        return None
    if m == n * (n - 1) // 2:
        return NodeKind.complete()
    if n >= 3 and m == n - 1:
        for v in range(n):
            if g.degree(v) == n - 1:
                return NodeKind.star(v)
    return None


class SplitService:
    """Split decomposition and minimal split trees"""

    @staticmethod
    def split_closure(
        g: ColoredGraph,
        seed: Tuple[int, int],
        outside: Optional[int] = None,
    ) -> frozenset:
        """Smallest split side containing ``seed`` whose cut is crossed by a seed vertex and ``outside``.

        Without ``outside``, the first seed vertex with a neighbor beyond the seed anchors
        the cut at its smallest such neighbor. The result may be all of V but one vertex.
        """
        graph_service.require_connected(g, "split_closure")
        u, v = seed
        if u == v:
            raise ValueError("seed vertices must be distinct")
        masks = _masks(g)
        seed_mask = (1 << u) | (1 << v)
        if outside is None:
            for a, p in ((u, v), (v, u)):
                beyond = masks[a] & ~seed_mask
                if beyond:
                    outside = next(_bits(beyond))
                    break
            else:
                return frozenset(range(g.vertex_count))
        else:
            a, p = (u, v) if masks[u] >> outside & 1 else (v, u)
            if not masks[a] >> outside & 1:
                raise ValueError(f"vertex {outside} is adjacent to neither seed vertex")
        return frozenset(_bits(_anchored_closure(masks, a, outside, p)))

    @staticmethod
    def seed_order(g: ColoredGraph) -> List[Seed]:
        """Anchors (a, b, p) that together reach every split.

        With v0 a vertex of least degree, any split puts v0 on some side X: either v0
        crosses the cut (a = v0), or it does not and serves as the second seed.
        """
        n = g.vertex_count
        v0 = min(range(n), key=lambda v: (g.degree(v), v))
        near = g.adjacency[v0]
        seeds: List[Seed] = []
        for p in range(n):
            if p != v0:
                seeds.extend((v0, b, p) for b in sorted(near) if b != p)
        for a, b in sorted(g.edges + [(v, u) for u, v in g.edges]):
            if v0 in (a, b) or b in near:
                continue
            seeds.append((a, b, v0))
        return seeds

    @staticmethod
    def find_split(g: ColoredGraph, rng: Optional[np.random.Generator] = None) -> Optional[Split]:
        """Some split of a connected graph, or None when the graph is prime.

        ``rng`` shuffles the seed order; the deterministic order is used otherwise.
        """
        graph_service.require_connected(g, "find_split")
        n = g.vertex_count
        if n <= 3:
            return None
        masks = _masks(g)
        seeds = SplitService.seed_order(g)
        if rng is not None:
            seeds = [seeds[i] for i in rng.permutation(len(seeds))]
        everything = (1 << n) - 1
        for a, b, p in seeds:
            side = _anchored_closure(masks, a, b, p)
            if bin(side).count("1") <= n - 2:
                x_side = frozenset(_bits(side))
                y_side = frozenset(_bits(everything & ~side))
                a_set = frozenset(v for v in x_side if masks[v] & ~side)
                b_set = frozenset(v for v in y_side if masks[v] & side)
                return Split(a=a_set, b=b_set, a_prime=x_side - a_set, b_prime=y_side - b_set)
        return None

    @staticmethod
    def classify_node(g: ColoredGraph) -> Optional[NodeKind]:
        """Complete, Star(center) or Prime; None when the node still has a split.

        Two-vertex nodes are complete.
        """
        kind, _ = SplitService._classify(g)
        return kind

    @staticmethod
    def _classify(
        g: ColoredGraph, rng: Optional[np.random.Generator] = None
    ) -> Tuple[Optional[NodeKind], Optional[Split]]:
        if g.vertex_count < 2:
            raise TreeStructureError(f"cannot classify a node with {g.vertex_count} vertices")
        kind = _degenerate_kind(g)
        if kind is not None:
            return kind, None
        split = SplitService.find_split(g, rng)
        if split is None:
            return NodeKind.prime(), None
        return None, split

    @staticmethod
    def apply_split(t: GraphLabeledTree, node: int, s: Split) -> GraphLabeledTree:
        """Replace ``node`` by its two halves under ``s`` (given in tree vertex ids)"""
        tree = t.copy()
        SplitService._apply_split(tree, node, s)
        return tree

    @staticmethod
    def _apply_split(tree: GraphLabeledTree, node: int, s: Split) -> Tuple[int, int]:
        vertices = tree.node_vertices.get(node)
        if vertices is None:
            raise TreeStructureError(f"no node {node}")
        parts = (s.a, s.b, s.a_prime, s.b_prime)
        if sum(len(part) for part in parts) != len(vertices) or frozenset().union(*parts) != vertices:
            raise InvalidSplitError("split sets must partition the node")
        if len(s.x_side) < 2 or len(s.y_side) < 2:
            raise InvalidSplitError("both sides of a split need two vertices")
        for u in s.x_side:
            across = tree.adjacency[u] & s.y_side
            expected = s.b if u in s.a else frozenset()
            if across != expected:
                raise InvalidSplitError(f"vertex {u} does not see exactly B across the cut")
        for v in s.b:
            if not tree.adjacency[v] & s.a:
                raise InvalidSplitError(f"vertex {v} of B has no neighbor in A")
        markers = tree.split_node(node, s.y_side, s.a, s.b)
        logger.debug(f"split node {node}: |X|={len(s.x_side)} |Y|={len(s.y_side)}")
        return markers

    @staticmethod
    def decompose(g: ColoredGraph, rng: Optional[np.random.Generator] = None) -> GraphLabeledTree:
        """Split a connected graph until every node is prime or degenerate"""
        graph_service.require_connected(g, "decompose")
        tree = GraphLabeledTree.from_graph(g)
        if g.vertex_count == 0:
            raise TreeStructureError("cannot decompose the empty graph")
        if g.vertex_count == 1:
            tree.kinds[0] = NodeKind.complete()
            return tree
        pending = [0]
        splits = 0
        while pending:
            node = pending.pop()
            graph, ids = tree.node_graph(node)
            kind, split = SplitService._classify(graph, rng)
            if kind is not None:
                tree.kinds[node] = SplitService._to_tree_kind(kind, ids)
                continue
            tree_split = Split(
                a=frozenset(ids[v] for v in split.a),
                b=frozenset(ids[v] for v in split.b),
                a_prime=frozenset(ids[v] for v in split.a_prime),
                b_prime=frozenset(ids[v] for v in split.b_prime),
            )
            m_a, m_b = SplitService._apply_split(tree, node, tree_split)
            splits += 1
            pending.extend((tree.node_of[m_a], tree.node_of[m_b]))
        if settings.CHECK_TREE_INVARIANTS:
            SplitService.validate_tree(tree)
        logger.debug(f"decomposed {g.vertex_count} vertices with {splits} splits into {len(tree.node_vertices)} nodes")
        return tree

    @staticmethod
    def _to_tree_kind(kind: NodeKind, ids: Sequence[int]) -> NodeKind:
        if kind.tag == NodeKindTag.STAR:
            return NodeKind.star(ids[kind.center])
        return kind

    @staticmethod
    def node_kind(tree: GraphLabeledTree, node: int) -> NodeKind:
        """Kind of a tree node, classifying it on first use"""
        kind = tree.kinds.get(node)
        if kind is None:
            graph, ids = tree.node_graph(node)
            if graph.vertex_count == 1:
                kind = NodeKind.complete()
            else:
                local = SplitService.classify_node(graph)
                if local is None:
                    raise TreeStructureError(f"node {node} is neither prime nor degenerate")
                kind = SplitService._to_tree_kind(local, ids)
            tree.kinds[node] = kind
        return kind

    @staticmethod
    def is_joinable(tree: GraphLabeledTree, m_a: int, m_b: int) -> bool:
        """Both nodes complete, or both stars with exactly one center on the tree edge"""
        first = SplitService.node_kind(tree, tree.node_of[m_a])
        second = SplitService.node_kind(tree, tree.node_of[m_b])
        if first.tag == NodeKindTag.COMPLETE and second.tag == NodeKindTag.COMPLETE:
            return True
        if first.tag == NodeKindTag.STAR and second.tag == NodeKindTag.STAR:
            return (first.center == m_a) != (second.center == m_b)
        return False

    @staticmethod
    def joinable_pairs(t: GraphLabeledTree) -> List[Tuple[int, int]]:
        """Tree edges whose nodes the minimal split tree would merge"""
        return [(u, v) for u, v in t.tree_edges() if SplitService.is_joinable(t, u, v)]

    @staticmethod
    def minimalize(t: GraphLabeledTree) -> GraphLabeledTree:
        """Join neighboring complete nodes and center-to-leaf stars until none remain"""
        tree = t.copy()
        joins = 0
        while True:
            pairs = SplitService.joinable_pairs(tree)
            if not pairs:
                break
            SplitService._join(tree, *pairs[0])
            joins += 1
        if settings.CHECK_TREE_INVARIANTS:
            SplitService.validate_tree(tree)
        logger.debug(f"minimalized with {joins} joins: {len(tree.node_vertices)} nodes remain")
        return tree

    @staticmethod
    def join_edge(t: GraphLabeledTree, tree_edge: Tuple[int, int]) -> GraphLabeledTree:
        """Merge the nodes at both ends of a tree edge"""
        tree = t.copy()
        SplitService._join(tree, *tree_edge)
        return tree

    @staticmethod
    def _join(tree: GraphLabeledTree, m_a: int, m_b: int) -> int:
        node = tree.join(m_a, m_b)
        graph, ids = tree.node_graph(node)
        kind = _degenerate_kind(graph)
        if kind is not None:
            tree.kinds[node] = SplitService._to_tree_kind(kind, ids)
        return node

    @staticmethod
    def join_all(t: GraphLabeledTree) -> ColoredGraph:
        """Join every tree edge; the remaining node is the decomposed graph.

        Original vertices are numbered by rank of their global ids.
        """
        tree = t.copy()
        for u, v in t.tree_edges():
            tree.join(u, v)
        originals = tree.originals()
        ranked = sorted(originals, key=lambda v: tree.global_id[v])
        index = {v: i for i, v in enumerate(ranked)}
        edges = [
            (index[u], index[w]) for u in originals for w in tree.adjacency[u] if u < w
        ]
        return ColoredGraph.build(len(originals), edges)

    @staticmethod
    def validate_tree(t: GraphLabeledTree) -> None:
        """Raise TreeStructureError unless every graph-labeled tree invariant holds"""
        t.validate()


split_service = SplitService()

split_closure = split_service.split_closure
find_split = split_service.find_split
classify_node = split_service.classify_node
apply_split = split_service.apply_split
decompose = split_service.decompose
minimalize = split_service.minimalize
join_edge = split_service.join_edge
join_all = split_service.join_all
joinable_pairs = split_service.joinable_pairs
validate_tree = split_service.validate_tree
