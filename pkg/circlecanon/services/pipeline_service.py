"""End-to-end canonization of circle graphs.

A graph (or a chord diagram, or both) is split into connected components. Each component
is decomposed into its minimal split tree, rooted at the center and encoded layer by layer.
The component encodings are sorted and concatenated behind their count.
"""
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
from pydantic import ValidationError

from ..core.config import settings
from ..core.exceptions import (
    EncodingFormatError,
    MissingRepresentationError,
    RepresentationError,
)
from ..models.node import NodeKindTag
from ..models.rooted import RootedTree
from ..models.tree import GraphLabeledTree
from ..schemas.canon import CanonInput
from ..schemas.chord import CircleRep
from ..schemas.graph import ColoredGraph, Encoding
from .chord_service import chord_service
from .graph_service import graph_service
from .oracle_service import oracle_service
from .sorting_service import sorting_service
from .split_service import split_service
from .tree_canon_service import tree_canon_service

logger = logging.getLogger(__name__)

SINGLE_VERTEX: Encoding = [0, 1]
SINGLE_EDGE: Encoding = [0, 2]


def _canon_input(graph: Optional[ColoredGraph], rep: Optional[CircleRep]) -> CanonInput:
    try:
        return CanonInput(graph=graph, rep=rep)
    except ValidationError as e:
        raise RepresentationError(e.errors()[0]["msg"])


class PipelineService:
    """Canonical encodings and isomorphism tests for circle graphs"""

    @staticmethod
    def resolve(input: CanonInput) -> Tuple[ColoredGraph, Optional[CircleRep]]:
        """The uncolored graph of an input, and its representation if one was given"""
        rep = input.rep
        if input.graph is None:
            return chord_service.interleaving_graph(rep), rep
        graph_service.validate_graph(input.graph)
        graph = ColoredGraph.build(input.graph.vertex_count, input.graph.edges)
        if rep is not None and chord_service.interleaving_graph(rep).edge_set != graph.edge_set:
            raise RepresentationError("representation does not realize the graph")
        return graph, rep

    @staticmethod
    def minimal_split_tree(
        input: CanonInput, rng: Optional[np.random.Generator] = None
    ) -> GraphLabeledTree:
        """Minimal split tree of a connected input"""
        graph, _ = PipelineService.resolve(input)
        graph_service.require_connected(graph, "minimal_split_tree")
        tree = split_service.minimalize(split_service.decompose(graph, rng))
        logger.info(f"minimal split tree: {graph.vertex_count} vertices in {len(tree.node_vertices)} nodes")
        return tree

    @staticmethod
    def prime_representations(rt: RootedTree, rep: Optional[CircleRep]) -> Dict[int, CircleRep]:
        """Representations of the prime nodes, restricted from ``rep`` or searched for"""
        if rep is not None:
            return tree_canon_service.node_representations(rt, rep)
        tree = rt.tree
        limit = settings.BRUTE_FORCE_REP_MAX_CHORDS
        reps: Dict[int, CircleRep] = {}
        for node in tree.nodes:
            if split_service.node_kind(tree, node).tag != NodeKindTag.PRIME:
                continue
            graph, _ = tree.node_graph(node)
            size = graph.vertex_count
            if size > limit:
                raise MissingRepresentationError(
                    f"prime node with {size} vertices exceeds the recognition limit of {limit}; "
                    "a circle representation is required",
                    node_size=size,
                )
            found = oracle_service.brute_find_rep(graph, limit=limit)
            if found is None:
                raise MissingRepresentationError(
                    f"prime node with {size} vertices has no circle representation: not a circle graph",
                    node_size=size,
                )
            logger.debug(f"found a representation for prime node {node} of size {size}")
            reps[node] = found
        return reps

    @staticmethod
    def canon_connected(input: CanonInput, rng: Optional[np.random.Generator] = None) -> Encoding:
        """Canonical encoding of a connected circle graph"""
        graph, rep = PipelineService.resolve(input)
        graph_service.require_connected(graph, "canon_connected")
        if graph.vertex_count == 1:
            return list(SINGLE_VERTEX)
        if graph.vertex_count == 2:
            return list(SINGLE_EDGE)
        tree = split_service.minimalize(split_service.decompose(graph, rng))
        rooted = tree_canon_service.center_root(tree)
        reps = PipelineService.prime_representations(rooted, rep)
        return tree_canon_service.canon_tree(rooted, reps)

    @staticmethod
    def canon_graph(input: CanonInput, rng: Optional[np.random.Generator] = None) -> Encoding:
        """Count of components followed by their length-prefixed encodings in sorted order"""
        graph, rep = PipelineService.resolve(input)
        encodings: List[Encoding] = []
        components = graph_service.connected_components(graph)
        for component, ids in components:
            component_rep = chord_service.restrict_rep(rep, ids) if rep is not None else None
            encodings.append(
                PipelineService.canon_connected(_canon_input(component, component_rep), rng)
            )
        order, _ = sorting_service.lex_sort_sequences(encodings)
        result: Encoding = [len(encodings)]
        for i in order:
            result.append(len(encodings[i]))
            result.extend(encodings[i])
        logger.info(
            f"canonized {graph.vertex_count} vertices in {len(components)} components: {len(result)} values"
        )
        return result

    @staticmethod
    def isomorphic(a: CanonInput, b: CanonInput) -> bool:
        return PipelineService.canon_graph(a) == PipelineService.canon_graph(b)

    @staticmethod
    def decode_graph(e: Encoding) -> ColoredGraph:
        """A graph whose canonical encoding is ``e``"""
        return PipelineService.decode_input(e).graph

    @staticmethod
    def decode_input(e: Encoding) -> CanonInput:
        """A graph whose canonical encoding is ``e``, together with a chord diagram of it"""
        if not e:
            raise EncodingFormatError("empty encoding")
        count = e[0]
        position = 1
        components: List[ColoredGraph] = []
        words: List[int] = []
        offset = 0
        for index in range(count):
            if position >= len(e):
                raise EncodingFormatError(f"encoding ends before component {index}")
            length = e[position]
            block = list(e[position + 1:position + 1 + length])
            if length == 0 or len(block) != length:
                raise EncodingFormatError(f"component {index} is truncated")
            position += 1 + length
            graph, rep = PipelineService._decode_component(block)
            words.extend(label + offset for label in rep.word)
            offset += graph.vertex_count
            components.append(graph)
        if position != len(e):
            raise EncodingFormatError(f"{len(e) - position} trailing values after the components")
        return _canon_input(graph_service.disjoint_union(components), CircleRep(word=words))

    @staticmethod
    def _decode_component(block: Encoding) -> Tuple[ColoredGraph, CircleRep]:
        if block == SINGLE_VERTEX:
            return ColoredGraph.build(1, []), CircleRep(word=[0, 0])
        if block == SINGLE_EDGE:
            return ColoredGraph.build(2, [(0, 1)]), CircleRep(word=[0, 1, 0, 1])
        if block[0] == 0:
            raise EncodingFormatError(f"unknown sentinel encoding {block}")
        tree, reps = tree_canon_service.decode_with_reps(block)
        return split_service.join_all(tree), tree_canon_service.compose_representation(tree, reps)


pipeline_service = PipelineService()

canon_connected = pipeline_service.canon_connected
canon_graph = pipeline_service.canon_graph
isomorphic = pipeline_service.isomorphic
decode_graph = pipeline_service.decode_graph
minimal_split_tree = pipeline_service.minimal_split_tree
decode_input = pipeline_service.decode_input
