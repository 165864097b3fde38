import networkx as nx

from circlecanon.schemas.canon import CanonInput
from circlecanon.schemas.chord import CircleRep
from circlecanon.schemas.graph import ColoredGraph
from circlecanon.services.chord_service import chord_service

# P4 labeled 0-1-2-3
P4_WORD = [0, 1, 0, 2, 1, 3, 2, 3]


def graph_of(graph: nx.Graph) -> ColoredGraph:
    return ColoredGraph.from_networkx(nx.convert_node_labels_to_integers(graph))


def rep_input(rep: CircleRep) -> CanonInput:
    return CanonInput.of_rep(rep)


def graph_input(graph: ColoredGraph) -> CanonInput:
    return CanonInput.of_graph(graph)


def random_circle_graph(n: int, seed: int) -> ColoredGraph:
    return chord_service.interleaving_graph(chord_service.random_rep(n, seed))


def largest_component_rep(rep: CircleRep) -> CircleRep:
    """The diagram restricted to the chords of its largest connected component"""
    graph = chord_service.interleaving_graph(rep).to_networkx()
    component = max(nx.connected_components(graph), key=lambda c: (len(c), -min(c)))
    return chord_service.restrict_rep(rep, sorted(component))
