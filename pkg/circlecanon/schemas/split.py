from typing import FrozenSet, Optional

from pydantic import BaseModel, ConfigDict

from ..models.node import NodeKindTag


class Split(BaseModel):
    """Partition (A, B, A', B') whose A-B cut is complete bipartite.

    A holds the vertices of the X side with neighbors across the cut, A' the rest of X;
    likewise B and B' on the Y side.
    """
    model_config = ConfigDict(frozen=True)

    a: FrozenSet[int]
    b: FrozenSet[int]
    a_prime: FrozenSet[int]
    b_prime: FrozenSet[int]

    @property
    def x_side(self) -> FrozenSet[int]:
        return self.a | self.a_prime

    @property
    def y_side(self) -> FrozenSet[int]:
        return self.b | self.b_prime


class NodeKind(BaseModel):
    """Prime, Complete or Star(center)"""
    model_config = ConfigDict(frozen=True)

    tag: NodeKindTag
    center: Optional[int] = None

    @classmethod
    def complete(cls) -> "NodeKind":
        return cls(tag=NodeKindTag.COMPLETE)

    @classmethod
    def star(cls, center: int) -> "NodeKind":
        return cls(tag=NodeKindTag.STAR, center=center)

    @classmethod
    def prime(cls) -> "NodeKind":
        return cls(tag=NodeKindTag.PRIME)
