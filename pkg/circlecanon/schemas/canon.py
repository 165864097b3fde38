from typing import Optional

from pydantic import BaseModel, ConfigDict, model_validator

from .chord import CircleRep
from .graph import ColoredGraph


class CanonInput(BaseModel):
    """A graph, a representation, or both.

    Graph colors are ignored. When both are present the representation's labels are the
    graph's vertex ids, and pipeline_service checks that it realizes the graph.
    """
    model_config = ConfigDict(frozen=True)

    graph: Optional[ColoredGraph] = None
    rep: Optional[CircleRep] = None

    @model_validator(mode="after")
    def check_present(self) -> "CanonInput":
        if self.graph is None and self.rep is None:
            raise ValueError("either a graph or a representation is required")
        if self.graph is not None and self.rep is not None:
            if self.graph.vertex_count != self.rep.chord_count:
                raise ValueError(
                    f"representation has {self.rep.chord_count} chords, "
                    f"graph has {self.graph.vertex_count} vertices"
                )
        return self

    @classmethod
    def of_graph(cls, graph: ColoredGraph) -> "CanonInput":
        return cls(graph=graph)

    @classmethod
    def of_rep(cls, rep: CircleRep) -> "CanonInput":
        return cls(rep=rep)
