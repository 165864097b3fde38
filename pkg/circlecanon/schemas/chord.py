from functools import cached_property
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CircleRep(BaseModel):
    """Chord diagram: the clockwise circular word of 2n endpoint labels.

    Labels are 0..n-1 and each occurs exactly twice. ``label_map`` records how the labels of
    a parsed file were renumbered (original label -> internal label).
    """
    model_config = ConfigDict(frozen=True)

    word: List[int]
    label_map: Dict[int, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_word(self) -> "CircleRep":
        if len(self.word) % 2:
            raise ValueError(f"circular word has odd length {len(self.word)}")
        n = len(self.word) // 2
        counts = [0] * n
        for label in self.word:
            if not 0 <= label < n:
                raise ValueError(f"label {label} outside 0..{n - 1}")
            counts[label] += 1
        for label, count in enumerate(counts):
            if count != 2:
                raise ValueError(f"label {label} occurs {count} times")
        return self

    @property
    def chord_count(self) -> int:
        return len(self.word) // 2

    @cached_property
    def endpoints(self) -> List[Tuple[int, int]]:
        """For each chord, its two positions in increasing order"""
        first = [-1] * self.chord_count
        result: List[Tuple[int, int]] = [(-1, -1)] * self.chord_count
        for position, label in enumerate(self.word):
            if first[label] < 0:
                first[label] = position
            else:
                result[label] = (first[label], position)
        return result

    @cached_property
    def partner(self) -> List[int]:
        """partner[i] is the position of the other endpoint of the chord at position i"""
        result = [0] * len(self.word)
        for p, q in self.endpoints:
            result[p] = q
            result[q] = p
        return result


class LambdaWord(BaseModel):
    """Rotation-invariant word g_1, c_1, ..., g_2n, c_2n of a colored chord diagram.

    g_i counts the endpoints strictly between endpoint i and its partner clockwise; c_i is
    the chord color shifted by 2n-1 so that gaps and colors never collide.
    """
    model_config = ConfigDict(frozen=True)

    values: List[int]
    chord_count: int = Field(..., ge=1)

    @property
    def gaps(self) -> List[int]:
        return self.values[0::2]

    @property
    def shifted_colors(self) -> List[int]:
        return self.values[1::2]

    @property
    def color_shift(self) -> int:
        return 2 * self.chord_count - 1
