import os

import hypothesis
import networkx as nx
import pytest

from circlecanon.schemas.chord import CircleRep
from circlecanon.schemas.graph import ColoredGraph

from .helpers import P4_WORD, graph_of

hypothesis.settings.register_profile("default", max_examples=50, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=1000, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def p4() -> ColoredGraph:
    return graph_of(nx.path_graph(4))


@pytest.fixture
def p4_rep() -> CircleRep:
    return CircleRep(word=P4_WORD)


@pytest.fixture
def s3() -> ColoredGraph:
    return graph_of(nx.star_graph(3))


@pytest.fixture
def c5() -> ColoredGraph:
    return graph_of(nx.cycle_graph(5))


@pytest.fixture
def k3() -> ColoredGraph:
    return graph_of(nx.complete_graph(3))


@pytest.fixture
def k4() -> ColoredGraph:
    return graph_of(nx.complete_graph(4))
