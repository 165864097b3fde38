from .sorting_service import sorting_service
from .graph_service import graph_service
from .chord_service import chord_service
from .split_service import split_service
from .tree_canon_service import tree_canon_service
from .oracle_service import oracle_service
from .pipeline_service import pipeline_service

__all__ = [
    "sorting_service",
    "graph_service",
    "chord_service",
    "split_service",
    "tree_canon_service",
    "oracle_service",
    "pipeline_service",
]
