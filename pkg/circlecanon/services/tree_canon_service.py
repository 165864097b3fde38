"""Layer-by-layer canonization of graph-labeled trees, and its inverse.

Nodes are processed from the deepest layer up. Each node's colors are renumbered onto
0..c-1, the node canonizer encodes it, and the encoding is prefixed by c and the renumbering
table. A layer's prefixed encodings are ranked lexicographically and every node receives a
fresh color per rank, which is then written onto its parent marker vertex. The result lists
the encodings of all colors in color order.
"""
import logging
from collections import deque
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

from ..core.config import settings
from ..core.exceptions import (
    EncodingFormatError,
    MissingRepresentationError,
    RepresentationError,
    TreeStructureError,
)
from ..models.node import NodeKindTag, VertexRole
from ..models.rooted import RootedTree
from ..models.tree import GraphLabeledTree
from ..schemas.chord import CircleRep
from ..schemas.graph import ColoredGraph, Encoding
from ..schemas.split import NodeKind
from .chord_service import chord_service
from .sorting_service import sorting_service
from .split_service import split_service

logger = logging.getLogger(__name__)

MARKER_COLOR = 0
ORIGINAL_COLOR = 1
FIRST_FREE_COLOR = 2


class TreeCanonService:
    """Canonical encodings of graph-labeled trees"""

    @staticmethod
    def center_root(t: GraphLabeledTree) -> RootedTree:
        """Root the tree at its central node.

        A central tree edge is subdivided by a synthetic complete node on two markers.
        Markers start with color 0 and original vertices with color 1.
        """
        tree = t.copy()
        if not tree.node_vertices:
            raise TreeStructureError("cannot root an empty tree")
        neighbors: Dict[int, List[Tuple[int, int, int]]] = {
            node: tree.neighbor_nodes(node) for node in tree.nodes
        }

        centers = TreeCanonService._centers(neighbors)

        synthetic: Optional[int] = None
        if len(centers) == 2:
            first, second = centers
            m_a, m_b = next((m, p) for m, p, other in neighbors[first] if other == second)
            synthetic = tree.subdivide(m_a, m_b)
            tree.kinds[synthetic] = NodeKind.complete()
            root = synthetic
            logger.debug(f"central tree edge {m_a}-{m_b} subdivided by node {synthetic}")
        else:
            root = centers[0]

        rooted = RootedTree(tree=tree, root=root, synthetic=synthetic)
        rooted.parent[root] = None
        rooted.depth[root] = 0
        queue = deque([root])
        while queue:
            node = queue.popleft()
            rooted.children[node] = []
            for marker, partner, other in tree.neighbor_nodes(node):
                if other == rooted.parent[node]:
                    continue
                rooted.parent[other] = node
                rooted.depth[other] = rooted.depth[node] + 1
                rooted.up_marker[other] = partner
                rooted.parent_marker[other] = marker
                rooted.children[node].append(other)
                queue.append(other)
        rooted.colors = {
            v: MARKER_COLOR if role == VertexRole.MARKER else ORIGINAL_COLOR
            for v, role in tree.role.items()
        }
        return rooted

    @staticmethod
    def _centers(neighbors: Mapping[int, List[Tuple[int, int, int]]]) -> List[int]:
        """One or two central nodes, found by peeling leaves"""
        count = len(neighbors)
        if count <= 2:
            return sorted(neighbors)
        degree = {node: len(links) for node, links in neighbors.items()}
        leaves = [node for node, d in degree.items() if d <= 1]
        removed = len(leaves)
        while removed < count:
            next_leaves = []
            for leaf in leaves:
                degree[leaf] = 0
                for _, _, other in neighbors[leaf]:
                    if degree[other] > 0:
                        degree[other] -= 1
                        if degree[other] == 1:
                            next_leaves.append(other)
            removed += len(next_leaves)
            leaves = next_leaves
        return sorted(leaves)

    @staticmethod
    def renumber_colors(colors: Sequence[int]) -> Tuple[List[int], List[int]]:
        """The used colors ascending (phi), and each color replaced by its index in phi"""
        phi = sorted(set(colors))
        index = {color: i for i, color in enumerate(phi)}
        return phi, [index[color] for color in colors]

    @staticmethod
    def canon_node(
        g: ColoredGraph,
        colors: Sequence[int],
        kind: NodeKind,
        rep: Optional[CircleRep] = None,
    ) -> Encoding:
        """Canonical encoding of a colored prime or degenerate node.

        Complete: 0 and the sorted colors. Star: 1, the center color and the sorted leaf
        colors. Prime: 2 and the smaller canonical lambda word of the representation and its
        reversal.
        """
        n = g.vertex_count
        if len(colors) != n or any(not 0 <= c < max(n, 1) for c in colors):
            raise RepresentationError(f"node colors must be {n} values in 0..{n - 1}")
        if kind.tag == NodeKindTag.COMPLETE:
            return [0] + sorted(colors)
        if kind.tag == NodeKindTag.STAR:
            leaves = sorted(c for v, c in enumerate(colors) if v != kind.center)
            return [1, colors[kind.center]] + leaves
        if rep is None:
            raise MissingRepresentationError(
                f"prime node with {n} vertices has no circle representation", node_size=n
            )
        if rep.chord_count != n:
            raise RepresentationError(f"representation has {rep.chord_count} chords for a node of {n} vertices")
        if settings.VERIFY_NODE_REPRESENTATIONS:
            if chord_service.interleaving_graph(rep).edge_set != g.edge_set:
                raise RepresentationError("representation does not realize the prime node")
        forward = chord_service.canon_rep(rep, colors)
        backward = chord_service.canon_rep(chord_service.reverse_rep(rep), colors)
        return [2] + min(forward, backward)

    @staticmethod
    def _local_kind(tree: GraphLabeledTree, node: int, ids: Sequence[int]) -> NodeKind:
        kind = split_service.node_kind(tree, node)
        if kind.tag == NodeKindTag.STAR:
            return NodeKind.star(ids.index(kind.center))
        return kind

    @staticmethod
    def canon_tree(rt: RootedTree, node_reps: Optional[Mapping[int, CircleRep]] = None) -> Encoding:
        """Canonical encoding of a rooted graph-labeled tree.

        ``node_reps`` maps every prime node to its representation on local indices (the
        node's vertex ids in increasing order). Output: c-1, then for every color 2..c the
        length of its stored encoding followed by the encoding.
        """
        node_reps = node_reps or {}
        tree = rt.tree
        colors = dict(rt.colors)
        epsilon: Dict[int, Encoding] = {}
        next_color = FIRST_FREE_COLOR
        root_color = FIRST_FREE_COLOR

        for depth, layer in reversed(list(enumerate(rt.layers()))):
            gammas: List[Encoding] = []
            for node in layer:
                graph, ids = tree.node_graph(node)
                node_colors = [colors[v] for v in ids]
                zeros = sum(1 for v in ids if tree.is_marker(v) and colors[v] == MARKER_COLOR)
                if zeros != (0 if node == rt.root else 1):
                    raise TreeStructureError(
                        f"node {node} has {zeros} uncolored markers when processed"
                    )
                phi, local = TreeCanonService.renumber_colors(node_colors)
                kind = TreeCanonService._local_kind(tree, node, ids)
                gamma = TreeCanonService.canon_node(graph, local, kind, node_reps.get(node))
                gammas.append([len(phi)] + phi + gamma)

            _, ranks = sorting_service.lex_sort_sequences(gammas)
            base = next_color
            for node, gamma_prime, rank in zip(layer, gammas, ranks):
                color = base + rank
                epsilon[color] = gamma_prime
                if node == rt.root:
                    root_color = color
                else:
                    colors[rt.parent_marker[node]] = color
            next_color = base + max(ranks) + 1
            logger.debug(f"layer {depth}: {len(layer)} nodes, {max(ranks) + 1} classes")

        encoding: Encoding = [root_color - 1]
        for color in range(FIRST_FREE_COLOR, root_color + 1):
            block = epsilon[color]
            encoding.append(len(block))
            encoding.extend(block)
        return encoding

    @staticmethod
    def parse_table(e: Sequence[int]) -> Dict[int, List[int]]:
        """Split an encoded concatenation into its per-color blocks"""
        if not e:
            raise EncodingFormatError("empty encoding")
        count = e[0]
        if count < 1:
            raise EncodingFormatError(f"table must hold at least one entry, not {count}")
        table: Dict[int, List[int]] = {}
        position = 1
        for color in range(FIRST_FREE_COLOR, count + FIRST_FREE_COLOR):
            if position >= len(e):
                raise EncodingFormatError(f"table ends before the entry of color {color}")
            length = e[position]
            block = list(e[position + 1:position + 1 + length])
            if len(block) != length or length == 0:
                raise EncodingFormatError(f"entry of color {color} is truncated")
            table[color] = block
            position += 1 + length
        if position != len(e):
            raise EncodingFormatError(f"{len(e) - position} trailing values after the table")
        return table

    @staticmethod
    def _node_from_gamma(gamma: Sequence[int]) -> Tuple[ColoredGraph, NodeKind, Optional[CircleRep]]:
        """Invert a node encoding into a graph whose vertex colors are the renumbered colors.

        Prime nodes also return the chord diagram rebuilt from their lambda word.
        """
        if not gamma:
            raise EncodingFormatError("empty node encoding")
        try:
            tag = NodeKindTag.from_encoding_tag(gamma[0])
        except ValueError as e:
            raise EncodingFormatError(str(e))
        if tag == NodeKindTag.COMPLETE:
            colors = list(gamma[1:])
            n = len(colors)
            if n == 0:
                raise EncodingFormatError("complete node without vertices")
            edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
            return ColoredGraph.build(n, edges, colors), NodeKind.complete(), None
        if tag == NodeKindTag.STAR:
            colors = list(gamma[1:])
            if len(colors) < 3:
                raise EncodingFormatError("star node needs a center and two leaves")
            edges = [(0, v) for v in range(1, len(colors))]
            return ColoredGraph.build(len(colors), edges, colors), NodeKind.star(0), None
        rep, colors = chord_service.rep_from_lambda(gamma[1:])
        graph = chord_service.interleaving_graph(rep).with_colors(colors)
        return graph, NodeKind.prime(), rep

    @staticmethod
    def decode(e: Sequence[int]) -> GraphLabeledTree:
        """Rebuild a graph-labeled tree isomorphic to the one ``e`` was computed from"""
        tree, _ = TreeCanonService.decode_with_reps(e)
        return tree

    @staticmethod
    def decode_with_reps(e: Sequence[int]) -> Tuple[GraphLabeledTree, Dict[int, CircleRep]]:
        """Decode, also returning the chord diagram of every prime node on local indices.

        The root comes from the last table entry; every vertex colored 2 or more expands into
        the subtree of its color, linked at that subtree's only color-0 marker.
        """
        table = TreeCanonService.parse_table(e)
        root_color = max(table)
        tree = GraphLabeledTree()
        reps: Dict[int, CircleRep] = {}
        next_original = 0
        pending: List[Tuple[int, Optional[int]]] = [(root_color, None)]
        while pending:
            color, parent_vertex = pending.pop()
            block = table[color]
            used = block[0]
            phi = block[1:1 + used]
            if used < 1 or len(phi) != used or any(x >= y for x, y in zip(phi, phi[1:])):
                raise EncodingFormatError(f"entry of color {color} has a malformed color table")
            graph, kind, rep = TreeCanonService._node_from_gamma(block[1 + used:])

            node = tree.new_node()
            vertices = []
            zero_markers = []
            for local in graph.colors:
                if local >= used:
                    raise EncodingFormatError(f"entry of color {color} uses color index {local} beyond its table")
                actual = phi[local]
                if actual == ORIGINAL_COLOR:
                    v = tree.add_vertex(node, VertexRole.ORIGINAL, global_id=next_original)
                    next_original += 1
                else:
                    v = tree.add_vertex(node, VertexRole.MARKER)
                    if actual == MARKER_COLOR:
                        zero_markers.append(v)
                    elif actual >= color or actual not in table:
                        raise EncodingFormatError(f"entry of color {color} refers to color {actual}")
                    else:
                        pending.append((actual, v))
                vertices.append(v)
            for u, w in graph.edges:
                tree.add_normal_edge(vertices[u], vertices[w])
            if kind.tag == NodeKindTag.STAR:
                kind = NodeKind.star(vertices[kind.center])
            tree.kinds[node] = kind
            if rep is not None:
                # fresh vertex ids increase with the local index
                reps[node] = rep

            expected = 0 if parent_vertex is None else 1
            if len(zero_markers) != expected:
                raise EncodingFormatError(
                    f"entry of color {color} has {len(zero_markers)} parent markers, expected {expected}"
                )
            if parent_vertex is not None:
                tree.add_tree_edge(parent_vertex, zero_markers[0])
        tree.validate()
        return tree, reps

    @staticmethod
    def _node_word(tree: GraphLabeledTree, node: int, rep: Optional[CircleRep]) -> List[int]:
        """A chord diagram of one node, as a word of tree vertex ids"""
        ids = sorted(tree.node_vertices[node])
        kind = split_service.node_kind(tree, node)
        if kind.tag == NodeKindTag.COMPLETE:
            return ids + ids
        if kind.tag == NodeKindTag.STAR:
            leaves = [v for v in ids if v != kind.center]
            return [kind.center] + leaves + [kind.center] + leaves[::-1]
        if rep is None:
            raise MissingRepresentationError(
                f"prime node {node} has no circle representation", node_size=len(ids)
            )
        return [ids[label] for label in rep.word]

    @staticmethod
    def compose_representation(t: GraphLabeledTree, node_reps: Mapping[int, CircleRep]) -> CircleRep:
        """Chord diagram of the graph obtained by joining every tree edge of ``t``.

        Prime nodes take their diagram from ``node_reps`` (on local indices); complete and
        star nodes use their standard diagrams. A child diagram opened at its parent-side
        marker reads m a m b; the two endpoints of the partner marker in the parent are
        replaced by a and b. Chords are numbered as in split_service.join_all.
        """
        root = t.nodes[0]
        order = [root]
        up: Dict[int, int] = {}
        seen = {root}
        for node in order:
            for _, partner, other in t.neighbor_nodes(node):
                if other not in seen:
                    seen.add(other)
                    up[other] = partner
                    order.append(other)

        halves: Dict[int, Tuple[List[int], List[int]]] = {}
        expanded: List[int] = []
        for node in reversed(order):
            own = up.get(node)
            expanded = []
            opened: Set[int] = set()
            for v in TreeCanonService._node_word(t, node, node_reps.get(node)):
                if v == own or not t.is_marker(v):
                    expanded.append(v)
                elif v in opened:
                    expanded.extend(halves[v][1])
                else:
                    opened.add(v)
                    expanded.extend(halves[v][0])
            if own is not None:
                start = expanded.index(own)
                rotated = expanded[start:] + expanded[:start]
                second = rotated.index(own, 1)
                halves[t.tree_partner[own]] = (rotated[1:second], rotated[second + 1:])

        ranked = sorted(t.originals(), key=lambda v: t.global_id[v])
        index = {v: i for i, v in enumerate(ranked)}
        return CircleRep(word=[index[v] for v in expanded])

    @staticmethod
    def layers(rt: RootedTree) -> List[List[int]]:
        """Nodes grouped by distance from the root, nearest first"""
        return rt.layers()

    @staticmethod
    def marker_scope(rt: RootedTree, node: int, marker: int) -> Set[int]:
        """Global ids of the original vertices beyond ``marker``'s tree edge"""
        tree = rt.tree
        other = tree.node_of[tree.tree_partner[marker]]
        if rt.parent.get(other) == node:
            return TreeCanonService._originals_below(rt, other)
        everything = {tree.global_id[v] for v in tree.originals()}
        return everything - TreeCanonService._originals_below(rt, node)

    @staticmethod
    def _originals_below(rt: RootedTree, node: int) -> Set[int]:
        tree = rt.tree
        return {
            tree.global_id[v]
            for current in rt.subtree_nodes(node)
            for v in tree.node_vertices[current]
            if not tree.is_marker(v)
        }

    @staticmethod
    def derive_node_representation(rt: RootedTree, node: int, global_rep: CircleRep) -> CircleRep:
        """Representation of a prime node obtained by restricting the graph's representation.

        Endpoints beyond a marker are relabeled by that marker and each marker's circular
        runs collapse to single endpoints. Should a marker not come out as exactly two runs,
        each marker is instead represented by one original vertex reached from it by
        alternating tree and normal edges. Labels of the result are local node indices.
        """
        tree = rt.tree
        graph, ids = tree.node_graph(node)
        index = {v: i for i, v in enumerate(ids)}
        markers = tree.markers_of(node)

        owner: List[Optional[int]] = [None] * global_rep.chord_count
        for v in ids:
            if not tree.is_marker(v):
                owner[tree.global_id[v]] = index[v]
        for m in markers:
            for gid in TreeCanonService.marker_scope(rt, node, m):
                owner[gid] = index[m]
        if any(label is None for label in owner):
            raise RepresentationError("representation has chords outside the decomposed graph")

        marker_labels = {index[m] for m in markers}
        labels = [owner[chord] for chord in global_rep.word]
        size = len(labels)
        start = next((i for i in range(size) if labels[i] != labels[i - 1]), 0)
        collapsed = []
        for offset in range(size):
            i = (start + offset) % size
            label = labels[i]
            if offset == 0 or label not in marker_labels or label != labels[i - 1]:
                collapsed.append(label)

        if len(collapsed) == 2 * len(ids):
            rep = TreeCanonService._checked_rep(collapsed, graph)
            if rep is not None:
                return rep
        logger.debug(f"marker runs of node {node} do not collapse cleanly, using representatives")

        chosen = {tree.global_id[v]: index[v] for v in ids if not tree.is_marker(v)}
        for m in markers:
            chosen[TreeCanonService._representative(tree, m)] = index[m]
        word = [chosen[chord] for chord in global_rep.word if chord in chosen]
        rep = TreeCanonService._checked_rep(word, graph)
        if rep is None:
            raise RepresentationError(
                f"representation is inconsistent with prime node {node} of the split tree"
            )
        return rep

    @staticmethod
    def _checked_rep(word: List[int], graph: ColoredGraph) -> Optional[CircleRep]:
        counts = [0] * graph.vertex_count
        for label in word:
            counts[label] += 1
        if any(count != 2 for count in counts):
            return None
        rep = CircleRep(word=word)
        if chord_service.interleaving_graph(rep).edge_set != graph.edge_set:
            return None
        return rep

    @staticmethod
    def _representative(tree: GraphLabeledTree, marker: int) -> int:
        """Global id of an original vertex reached from ``marker`` by alternating edges"""
        current = tree.tree_partner[marker]
        while True:
            nearest = min(tree.adjacency[current])
            if not tree.is_marker(nearest):
                return tree.global_id[nearest]
            current = tree.tree_partner[nearest]

    @staticmethod
    def node_representations(rt: RootedTree, global_rep: CircleRep) -> Dict[int, CircleRep]:
        """Restricted representations of every prime node"""
        return {
            node: TreeCanonService.derive_node_representation(rt, node, global_rep)
            for node in rt.tree.nodes
            if split_service.node_kind(rt.tree, node).tag == NodeKindTag.PRIME
        }


tree_canon_service = TreeCanonService()

center_root = tree_canon_service.center_root
renumber_colors = tree_canon_service.renumber_colors
canon_node = tree_canon_service.canon_node
canon_tree = tree_canon_service.canon_tree
decode = tree_canon_service.decode
derive_node_representation = tree_canon_service.derive_node_representation
decode_with_reps = tree_canon_service.decode_with_reps
compose_representation = tree_canon_service.compose_representation
layers = tree_canon_service.layers
