from typing import Any, Dict, Optional


class CircleCanonError(Exception):
    """Base class for every error raised by circlecanon"""

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def __str__(self) -> str:
        return self.message


class GraphValidationError(CircleCanonError):
    """A colored graph violates its invariants"""


class RepresentationError(CircleCanonError):
    """A circular word is not a valid chord diagram, or does not realize its graph"""


class DisconnectedGraphError(CircleCanonError):
    """A connected graph was required"""


class InvalidSplitError(CircleCanonError):
    """A partition offered as a split is not one"""


class TreeStructureError(CircleCanonError):
    """A graph-labeled tree is malformed"""


class MissingRepresentationError(CircleCanonError):
    """A prime node has no obtainable circle representation"""

    def __init__(self, message: str, node_size: int):
        super().__init__(message, {"node_size": node_size})
        self.node_size = node_size


class EncodingFormatError(CircleCanonError):
    """An encoding cannot be decoded"""


class OracleLimitError(CircleCanonError):
    """An oracle input is larger than its size cap"""


class FormatError(CircleCanonError):
    """A text file is malformed"""
