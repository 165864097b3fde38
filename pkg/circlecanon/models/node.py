import enum


class NodeKindTag(str, enum.Enum):
    """Node classes of a minimal split tree, tagged as in their encodings"""
    COMPLETE = "COMPLETE"
    STAR = "STAR"
    PRIME = "PRIME"

    @property
    def encoding_tag(self) -> int:
        return _ENCODING_TAGS[self]

    @classmethod
    def from_encoding_tag(cls, tag: int) -> "NodeKindTag":
        for kind, value in _ENCODING_TAGS.items():
            if value == tag:
                return kind
        raise ValueError(f"unknown node tag {tag}")


_ENCODING_TAGS = {
    NodeKindTag.COMPLETE: 0,
    NodeKindTag.STAR: 1,
    NodeKindTag.PRIME: 2,
}


class VertexRole(str, enum.Enum):
    ORIGINAL = "ORIGINAL"
    MARKER = "MARKER"
