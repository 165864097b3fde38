from .config import settings, Settings
from .exceptions import (
    CircleCanonError,
    GraphValidationError,
    RepresentationError,
    DisconnectedGraphError,
    InvalidSplitError,
    TreeStructureError,
    MissingRepresentationError,
    EncodingFormatError,
    OracleLimitError,
    FormatError,
)

__all__ = [
    "settings",
    "Settings",
    "CircleCanonError",
    "GraphValidationError",
    "RepresentationError",
    "DisconnectedGraphError",
    "InvalidSplitError",
    "TreeStructureError",
    "MissingRepresentationError",
    "EncodingFormatError",
    "OracleLimitError",
    "FormatError",
]
