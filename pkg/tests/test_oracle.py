import math

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from circlecanon.core.exceptions import OracleLimitError
from circlecanon.schemas.graph import ColoredGraph
from circlecanon.services.chord_service import interleaving_graph, min_rotation, random_rep
from circlecanon.services.graph_service import graph_service
from circlecanon.services.oracle_service import (
    brute_canon,
    brute_find_rep,
    brute_iso,
    brute_min_rotation,
    brute_splits,
    enumerate_reps,
)

from .helpers import graph_of


class TestBruteIso:
    def test_triangle_and_three_cycle(self, k3):
        assert brute_iso(k3, graph_of(nx.cycle_graph(3)))

    def test_path_and_star(self, p4, s3):
        assert not brute_iso(p4, s3)

    def test_colors_are_preserved(self, p4):
        assert not brute_iso(p4.with_colors([0, 1, 1, 0]), p4.with_colors([1, 0, 0, 1]))
        assert brute_iso(p4.with_colors([0, 1, 1, 0]), p4.with_colors([0, 1, 1, 0]))

    def test_relabeled_graph(self, c5):
        assert brute_iso(c5, graph_service.permute(c5, [3, 0, 4, 1, 2]))

    def test_agrees_with_networkx(self):
        atlas = nx.graph_atlas_g()[1:80]
        for first in atlas[::7]:
            for second in atlas:
                if first.number_of_nodes() != second.number_of_nodes():
                    continue
                expected = nx.is_isomorphic(first, second)
                assert brute_iso(graph_of(first), graph_of(second)) == expected

    def test_size_cap(self):
        big = ColoredGraph.build(10, [])
        with pytest.raises(OracleLimitError):
            brute_iso(big, big)


class TestBruteMinRotation:
    def test_example(self):
        assert brute_min_rotation([2, 1, 1]) == [1, 1, 2]

    def test_empty(self):
        with pytest.raises(ValueError):
            brute_min_rotation([])

    @given(st.lists(st.integers(0, 7), min_size=1, max_size=64))
    def test_agrees_with_booth(self, word):
        assert min_rotation(word)[1] == brute_min_rotation(word)


class TestBruteSplits:
    def test_cycle_has_none(self, c5):
        assert brute_splits(c5) == []

    def test_path(self, p4):
        sides = {split.x_side for split in brute_splits(p4)}
        assert frozenset({0, 1}) in sides
        assert frozenset({2, 3}) in sides

    def test_complete_graph(self, k4):
        sides = {split.x_side for split in brute_splits(k4)}
        assert sides == {frozenset(pair) for pair in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]}

    def test_size_cap(self):
        with pytest.raises(OracleLimitError):
            brute_splits(graph_of(nx.path_graph(8)))


class TestBruteFindRep:
    def test_triangle(self, k3):
        rep = brute_find_rep(k3)
        assert interleaving_graph(rep).edges == k3.edges

    def test_cycle(self, c5):
        rep = brute_find_rep(c5)
        assert rep.word[0] == 0
        assert interleaving_graph(rep).edges == c5.edges

    def test_empty_graph(self):
        assert brute_find_rep(ColoredGraph.build(0)).word == []

    def test_wheel_is_not_a_circle_graph(self):
        assert brute_find_rep(graph_of(nx.wheel_graph(6))) is None

    @given(st.integers(1, 7), st.integers(0, 2**32 - 1))
    def test_finds_a_diagram_of_every_circle_graph(self, n, seed):
        graph = interleaving_graph(random_rep(n, seed))
        rep = brute_find_rep(graph)
        assert rep is not None
        assert interleaving_graph(rep).edges == graph.edges

    def test_explicit_limit(self, c5):
        with pytest.raises(OracleLimitError):
            brute_find_rep(c5, limit=4)


class TestEnumerateReps:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_counts_matchings(self, n):
        reps = list(enumerate_reps(n))
        assert len(reps) == math.prod(range(1, 2 * n, 2))
        assert len({tuple(rep.word) for rep in reps}) == len(reps)

    def test_labels_by_first_occurrence(self):
        for rep in enumerate_reps(3):
            firsts = [label for i, label in enumerate(rep.word) if label not in rep.word[:i]]
            assert firsts == [0, 1, 2]


class TestBruteCanon:
    def test_isomorphic_graphs_share_the_signature(self, c5):
        assert brute_canon(c5) == brute_canon(graph_service.permute(c5, [4, 2, 0, 3, 1]))

    def test_path_and_star_differ(self, p4, s3):
        assert brute_canon(p4) != brute_canon(s3)

    def test_size_cap(self):
        with pytest.raises(OracleLimitError):
            brute_canon(ColoredGraph.build(9, []))
