import logging
import time

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from circlecanon.core.config import settings
from circlecanon.core.exceptions import (
    EncodingFormatError,
    MissingRepresentationError,
    RepresentationError,
    TreeStructureError,
)
from circlecanon.models.node import VertexRole
from circlecanon.models.tree import GraphLabeledTree
from circlecanon.schemas.chord import CircleRep
from circlecanon.schemas.graph import ColoredGraph
from circlecanon.schemas.split import NodeKind, Split
from circlecanon.services.chord_service import (
    canon_rep,
    interleaving_graph,
    random_rep,
    relabel_rep,
    reverse_rep,
    rotate_rep,
)
from circlecanon.services.oracle_service import brute_find_rep, brute_iso
from circlecanon.services.split_service import apply_split, decompose, join_all, minimalize
from circlecanon.services.tree_canon_service import (
    canon_node,
    canon_tree,
    center_root,
    compose_representation,
    decode,
    decode_with_reps,
    derive_node_representation,
    layers,
    renumber_colors,
    tree_canon_service,
)

from .helpers import P4_WORD, graph_of, largest_component_rep

K3_ENCODING = [1, 6, 1, 1, 0, 0, 0, 0]
P4_ENCODING = [2, 7, 2, 0, 1, 1, 1, 0, 1, 5, 1, 2, 0, 0, 0]


def rooted(graph: ColoredGraph):
    return center_root(minimalize(decompose(graph)))


def canon_from_rep(rep: CircleRep):
    rt = rooted(interleaving_graph(rep))
    return canon_tree(rt, tree_canon_service.node_representations(rt, rep))


class TestCenterRoot:
    def test_single_node(self, c5):
        rt = rooted(c5)
        assert rt.root == 0
        assert rt.synthetic is None
        assert layers(rt) == [[0]]

    def test_middle_of_three_nodes(self):
        rt = rooted(graph_of(nx.path_graph(5)))
        assert len(rt.tree.nodes) == 3
        members = {rt.tree.global_id[v] for v in rt.tree.node_vertices[rt.root] if not rt.tree.is_marker(v)}
        assert members == {2}
        assert len(rt.children[rt.root]) == 2

    def test_central_edge_is_subdivided(self, p4):
        rt = rooted(p4)
        assert rt.root == rt.synthetic
        assert sorted(rt.children[rt.root]) == [0, 1]
        assert rt.tree.kinds[rt.root] == NodeKind.complete()
        assert len(rt.tree.node_vertices[rt.root]) == 2
        rt.tree.validate()
        assert layers(rt) == [[rt.root], [0, 1]]

    def test_initial_colors(self, p4):
        rt = rooted(p4)
        for v, color in rt.colors.items():
            assert color == (0 if rt.tree.is_marker(v) else 1)

    def test_parent_markers(self, p4):
        rt = rooted(p4)
        for node in (0, 1):
            assert rt.tree.tree_partner[rt.up_marker[node]] == rt.parent_marker[node]
            assert rt.tree.node_of[rt.parent_marker[node]] == rt.root


class TestRenumberColors:
    def test_one_color(self):
        assert renumber_colors([1, 1, 1]) == ([1], [0, 0, 0])

    def test_gaps_in_colors(self):
        assert renumber_colors([0, 1, 7, 7]) == ([0, 1, 7], [0, 1, 2, 2])

    def test_ascending(self):
        assert renumber_colors([9, 3]) == ([3, 9], [1, 0])


class TestCanonNode:
    def test_complete(self, k3):
        assert canon_node(k3, [2, 0, 1], NodeKind.complete()) == [0, 0, 1, 2]

    def test_star(self, s3):
        assert canon_node(s3, [1, 2, 0, 2], NodeKind.star(0)) == [1, 1, 0, 2, 2]

    def test_prime_ignores_orientation(self, c5):
        rep = brute_find_rep(c5)
        colors = [0] * 5
        forward = canon_node(c5, colors, NodeKind.prime(), rep)
        assert forward == canon_node(c5, colors, NodeKind.prime(), reverse_rep(rep))
        assert forward[0] == 2
        assert len(forward) == 1 + 4 * 5

    def test_prime_without_rep(self, c5):
        with pytest.raises(MissingRepresentationError) as info:
            canon_node(c5, [0] * 5, NodeKind.prime())
        assert info.value.node_size == 5

    def test_prime_with_wrong_rep(self, c5):
        with pytest.raises(RepresentationError):
            canon_node(c5, [0] * 5, NodeKind.prime(), CircleRep(word=[0, 0, 1, 1, 2, 2, 3, 3, 4, 4]))

    def test_colors_out_of_range(self, k3):
        with pytest.raises(RepresentationError):
            canon_node(k3, [0, 1, 3], NodeKind.complete())


class TestCanonTree:
    def test_triangle(self, k3):
        assert canon_tree(rooted(k3)) == K3_ENCODING

    def test_path_with_equal_siblings(self, p4):
        assert canon_tree(rooted(p4)) == P4_ENCODING

    def test_rotated_and_relabeled_path(self):
        rep = CircleRep(word=P4_WORD)
        moved = relabel_rep(rotate_rep(rep, 3), [2, 0, 3, 1])
        assert canon_from_rep(moved) == canon_from_rep(rep) == P4_ENCODING

    def test_extra_uncolored_marker_is_reported(self, p4):
        rt = rooted(p4)
        rt.colors[rt.up_marker[0]] = 9
        with pytest.raises(TreeStructureError):
            canon_tree(rt)

    def test_missing_prime_representation(self, c5):
        with pytest.raises(MissingRepresentationError):
            canon_tree(rooted(c5))

    @given(st.integers(3, 30), st.integers(0, 2**32 - 1))
    def test_length_is_linear(self, n, seed):
        rep = largest_component_rep(random_rep(n, seed))
        graph = interleaving_graph(rep)
        if graph.vertex_count < 3:
            return
        encoded = canon_from_rep(rep)
        assert len(encoded) <= settings.ENCODING_LENGTH_CONSTANT * (graph.vertex_count + graph.edge_count)
        # one table entry per color, at most one color per tree node
        assert encoded[0] <= graph.vertex_count

    @given(st.data())
    def test_invariant_under_rotation_reversal_and_relabeling(self, data):
        n = data.draw(st.integers(3, 25))
        rep = largest_component_rep(random_rep(n, data.draw(st.integers(0, 2**32 - 1))))
        if rep.chord_count < 3:
            return
        expected = canon_from_rep(rep)
        k = data.draw(st.integers(0, 2 * rep.chord_count))
        permutation = data.draw(st.permutations(range(rep.chord_count)))
        assert canon_from_rep(rotate_rep(rep, k)) == expected
        assert canon_from_rep(reverse_rep(rep)) == expected
        assert canon_from_rep(relabel_rep(rep, permutation)) == expected


class TestDecode:
    def test_triangle(self):
        tree = decode(K3_ENCODING)
        assert tree.nodes == [0]
        assert tree.kinds[0] == NodeKind.complete()
        assert len(tree.originals()) == 3

    def test_path(self):
        tree = decode(P4_ENCODING)
        assert len(tree.nodes) == 3
        assert join_all(tree).edge_count == 3
        assert canon_tree(rooted(join_all(tree))) == P4_ENCODING

    @pytest.mark.parametrize("encoding", [
        [],
        [1],
        [1, 2, 1, 1],
        [1, 4, 1, 1, 3, 0],
        [1, 5, 1, 5, 0, 0, 0],
        K3_ENCODING + [9],
        [0],
    ])
    def test_malformed(self, encoding):
        with pytest.raises(EncodingFormatError):
            decode(encoding)

    @given(st.integers(3, 30), st.integers(0, 2**32 - 1))
    def test_decoded_tree_has_the_same_encoding(self, n, seed):
        rep = largest_component_rep(random_rep(n, seed))
        if rep.chord_count < 3:
            return
        encoded = canon_from_rep(rep)
        tree, reps = decode_with_reps(encoded)
        composed = compose_representation(tree, reps)
        assert interleaving_graph(composed).edges == join_all(tree).edges
        assert canon_from_rep(composed) == encoded


class TestDeriveNodeRepresentation:
    def test_restriction_to_a_star(self, p4):
        rt = rooted(p4)
        rep = derive_node_representation(rt, 1, CircleRep(word=P4_WORD))
        assert rep.word == [2, 0, 2, 1, 0, 1]

    def test_single_node_keeps_the_diagram(self, c5):
        rep = brute_find_rep(c5)
        derived = derive_node_representation(rooted(c5), 0, rep)
        assert interleaving_graph(derived).edges == c5.edges
        assert canon_rep(derived, [0] * 5) == canon_rep(rep, [0] * 5)

    @given(st.integers(4, 30), st.integers(0, 2**32 - 1))
    def test_every_node_restriction_realizes_its_node(self, n, seed):
        rep = largest_component_rep(random_rep(n, seed))
        if rep.chord_count < 4:
            return
        rt = rooted(interleaving_graph(rep))
        for node in rt.tree.nodes:
            derived = derive_node_representation(rt, node, rep)
            graph, _ = rt.tree.node_graph(node)
            assert interleaving_graph(derived).edge_set == graph.edge_set

    def test_scattered_marker_falls_back_to_representatives(self, caplog):
        star = graph_of(nx.star_graph(4))
        split = Split(a=frozenset({0}), b=frozenset({3, 4}), a_prime=frozenset({1, 2}), b_prime=frozenset())
        rt = center_root(apply_split(GraphLabeledTree.from_graph(star), 0, split))
        rep = CircleRep(word=[0, 3, 1, 4, 2, 0, 2, 4, 1, 3])
        assert interleaving_graph(rep).edges == star.edges
        with caplog.at_level(logging.DEBUG, logger="circlecanon.services.tree_canon_service"):
            derived = derive_node_representation(rt, 0, rep)
        assert "do not collapse cleanly" in caplog.text
        graph, _ = rt.tree.node_graph(0)
        assert derived.word == [0, 3, 1, 2, 0, 2, 1, 3]
        assert brute_iso(interleaving_graph(derived), graph)

    def test_diagram_of_another_graph(self, p4):
        with pytest.raises(RepresentationError, match="inconsistent with prime node"):
            derive_node_representation(rooted(p4), 1, CircleRep(word=[0, 1, 2, 3, 0, 1, 2, 3]))

    def test_diagram_with_extra_chords(self, p4):
        with pytest.raises(RepresentationError, match="outside the decomposed graph"):
            derive_node_representation(rooted(p4), 1, CircleRep(word=P4_WORD + [4, 4]))


def random_star_tree(node_count: int, rng: np.random.Generator) -> GraphLabeledTree:
    """Random recursive tree of star nodes with original centers"""
    tree = GraphLabeledTree()
    centers = []
    next_id = 0
    for index in range(node_count):
        node = tree.new_node()
        center = tree.add_vertex(node, VertexRole.ORIGINAL, global_id=next_id)
        for offset in (1, 2):
            leaf = tree.add_vertex(node, VertexRole.ORIGINAL, global_id=next_id + offset)
            tree.add_normal_edge(center, leaf)
        next_id += 3
        tree.kinds[node] = NodeKind.star(center)
        centers.append(center)
        if index:
            parent = int(rng.integers(0, index))
            up = tree.add_vertex(node, VertexRole.MARKER)
            down = tree.add_vertex(parent, VertexRole.MARKER)
            tree.add_normal_edge(center, up)
            tree.add_normal_edge(centers[parent], down)
            tree.add_tree_edge(up, down)
    return tree


def _timed(canonize) -> float:
    runs = []
    for _ in range(5):
        start = time.perf_counter()
        canonize()
        runs.append(time.perf_counter() - start)
    return float(np.median(runs))


def _timed_canon(node_count: int, rng: np.random.Generator) -> float:
    tree = random_star_tree(node_count, rng)
    return _timed(lambda: canon_tree(center_root(tree)))


def test_random_star_tree_is_valid():
    tree = random_star_tree(20, np.random.default_rng(1))
    tree.validate()
    encoded = canon_tree(center_root(tree))
    assert canon_tree(rooted(join_all(decode(encoded)))) == encoded


@pytest.mark.benchmark
def test_canonization_grows_linearly():
    rng = np.random.default_rng(0)
    small = _timed_canon(1 << 12, rng)
    large = _timed_canon(1 << 13, rng)
    assert large / small <= 2.5


def random_cycle_tree(node_count: int, rng: np.random.Generator):
    """Random recursive tree of prime 5-cycle nodes, each with at most three children.

    Returns the tree with the representation of every node on local indices.
    """
    parents = [-1]
    open_nodes = [0]
    child_count = [0]
    for index in range(1, node_count):
        slot = int(rng.integers(0, len(open_nodes)))
        parent = open_nodes[slot]
        parents.append(parent)
        child_count[parent] += 1
        child_count.append(0)
        open_nodes.append(index)
        if child_count[parent] == 3:
            open_nodes[slot] = open_nodes[-1]
            open_nodes.pop()

    cycle_rep = brute_find_rep(graph_of(nx.cycle_graph(5)))
    tree = GraphLabeledTree()
    slots = []
    next_id = 0
    for index in range(node_count):
        node = tree.new_node()
        markers = child_count[index] + (1 if index else 0)
        vertices = []
        for position in range(5):
            if position < markers:
                vertices.append(tree.add_vertex(node, VertexRole.MARKER))
            else:
                vertices.append(tree.add_vertex(node, VertexRole.ORIGINAL, global_id=next_id))
                next_id += 1
        for position in range(5):
            tree.add_normal_edge(vertices[position], vertices[(position + 1) % 5])
        tree.kinds[node] = NodeKind.prime()
        slots.append(vertices[1:] if index else vertices)
        if index:
            tree.add_tree_edge(vertices[0], slots[parents[index]].pop(0))
    return tree, {node: cycle_rep for node in tree.nodes}


def test_random_cycle_tree_is_valid():
    tree, reps = random_cycle_tree(12, np.random.default_rng(3))
    tree.validate()
    encoded = canon_tree(center_root(tree), reps)
    assert canon_from_rep(compose_representation(tree, reps)) == encoded


@pytest.mark.benchmark
def test_prime_node_canonization_grows_linearly():
    rng = np.random.default_rng(0)
    timings = []
    for node_count in (1 << 11, 1 << 12):
        tree, reps = random_cycle_tree(node_count, rng)
        timings.append(_timed(lambda: canon_tree(center_root(tree), reps)))
    assert timings[1] / timings[0] <= 2.5


@pytest.mark.benchmark
def test_random_diagram_canonization_is_linear_in_size():
    costs = []
    for n in (100, 200):
        rep = largest_component_rep(random_rep(n, n))
        graph = interleaving_graph(rep)
        tree = minimalize(decompose(graph))
        reps = tree_canon_service.node_representations(center_root(tree), rep)
        seconds = _timed(lambda: canon_tree(center_root(tree), reps))
        costs.append(seconds / (graph.vertex_count + graph.edge_count))
    assert costs[1] / costs[0] <= 2.5
