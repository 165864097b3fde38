import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import ValidationError

from ..core.exceptions import EncodingFormatError, GraphValidationError, RepresentationError
from ..schemas.chord import CircleRep, LambdaWord
from ..schemas.graph import ColoredGraph, Encoding

logger = logging.getLogger(__name__)


def _build_rep(word: List[int], label_map: Optional[Dict[int, int]] = None) -> CircleRep:
    try:
        return CircleRep(word=word, label_map=label_map or {})
    except ValidationError as e:
        raise RepresentationError(f"invalid circle representation: {e.errors()[0]['msg']}")


class ChordService:
    """Chord diagrams and their rotation-invariant canonization"""

    @staticmethod
    def parse_rep(tokens: Sequence[int]) -> CircleRep:
        """Validate a circular word and renumber its labels 0..n-1 by first occurrence"""
        if len(tokens) % 2:
            raise RepresentationError(f"circular word has odd length {len(tokens)}")
        counts: Dict[int, int] = {}
        for label in tokens:
            if label < 0:
                raise RepresentationError(f"negative label {label}")
            counts[label] = counts.get(label, 0) + 1
        for label, count in counts.items():
            if count != 2:
                raise RepresentationError(
                    f"label {label} occurs {count} times",
                    {"label": label, "count": count},
                )
        label_map: Dict[int, int] = {}
        word = []
        for label in tokens:
            if label not in label_map:
                label_map[label] = len(label_map)
            word.append(label_map[label])
        return _build_rep(word, label_map)

    @staticmethod
    def interleaving_graph(r: CircleRep) -> ColoredGraph:
        """Graph on the chords; u and v are adjacent iff their endpoints alternate.

        One sweep over the endpoints keeps the open chords linked in opening order.
        A closing chord crosses exactly the open chords linked after it, so the walk
        costs one step per edge.
        """
        count = r.chord_count
        before = [-1] * count
        after = [-1] * count
        last = -1
        edges = []
        for position, u in enumerate(r.word):
            if r.endpoints[u][0] == position:
                before[u] = last
                if last >= 0:
                    after[last] = u
                last = u
                continue
            v = after[u]
            while v >= 0:
                edges.append((u, v))
                v = after[v]
            if before[u] >= 0:
                after[before[u]] = after[u]
            if after[u] >= 0:
                before[after[u]] = before[u]
            else:
                last = before[u]
        return ColoredGraph.build(count, edges)

    @staticmethod
    def reverse_rep(r: CircleRep) -> CircleRep:
        """The same diagram read counterclockwise"""
        return _build_rep(r.word[::-1])

    @staticmethod
    def rotate_rep(r: CircleRep, k: int) -> CircleRep:
        """Start the word k endpoints later"""
        if not r.word:
            return r
        k %= len(r.word)
        return _build_rep(r.word[k:] + r.word[:k])

    @staticmethod
    def relabel_rep(r: CircleRep, permutation: Sequence[int]) -> CircleRep:
        """Rename chord v as permutation[v]"""
        return _build_rep([permutation[label] for label in r.word])

    @staticmethod
    def restrict_rep(r: CircleRep, labels: Sequence[int]) -> CircleRep:
        """Keep only the chords in ``labels``; labels[i] becomes chord i"""
        index = {label: i for i, label in enumerate(labels)}
        return _build_rep([index[label] for label in r.word if label in index])

    @staticmethod
    def lambda_encoding(r: CircleRep, colors: Sequence[int]) -> LambdaWord:
        """Interleave endpoint gaps with chord colors shifted by 2n-1"""
        n = r.chord_count
        if n == 0:
            raise RepresentationError("empty representation has no lambda word")
        if len(colors) != n:
            raise GraphValidationError(f"expected {n} colors, got {len(colors)}")
        color_array = np.asarray(colors, dtype=np.int64)
        if color_array.min() < 0 or color_array.max() >= n:
            raise GraphValidationError(f"colors must lie in 0..{n - 1}")

        size = 2 * n
        positions = np.arange(size, dtype=np.int64)
        gaps = (np.asarray(r.partner, dtype=np.int64) - positions - 1) % size
        shifted = color_array[np.asarray(r.word, dtype=np.int64)] + (size - 1)
        values = np.empty(2 * size, dtype=np.int64)
        values[0::2] = gaps
        values[1::2] = shifted
        return LambdaWord(values=values.tolist(), chord_count=n)

    @staticmethod
    def rep_from_lambda(values: Sequence[int]) -> Tuple[CircleRep, List[int]]:
        """Rebuild a chord diagram and its chord colors from a lambda word.

        Endpoint i is matched with the endpoint at clockwise distance g_i + 1; chords are
        numbered by first occurrence.
        """
        if not values or len(values) % 4:
            raise EncodingFormatError(f"lambda word length {len(values)} is not a positive multiple of 4")
        n = len(values) // 4
        size = 2 * n
        gaps = list(values[0::2])
        shifted = list(values[1::2])
        label = [-1] * size
        colors: List[int] = []
        for i in range(size):
            if not 0 <= gaps[i] <= size - 2:
                raise EncodingFormatError(f"gap {gaps[i]} outside 0..{size - 2}")
            j = (i + gaps[i] + 1) % size
            if (j + gaps[j] + 1) % size != i or gaps[i] + gaps[j] != size - 2:
                raise EncodingFormatError(f"inconsistent gaps at endpoints {i} and {j}")
            if shifted[i] != shifted[j]:
                raise EncodingFormatError(f"endpoints {i} and {j} of one chord differ in color")
            if label[i] < 0:
                color = shifted[i] - (size - 1)
                if not 0 <= color < n:
                    raise EncodingFormatError(f"shifted color {shifted[i]} outside {size - 1}..{3 * n - 2}")
                label[i] = label[j] = len(colors)
                colors.append(color)
        return _build_rep(label), colors

    @staticmethod
    def min_rotation(w: Sequence[int]) -> Tuple[int, List[int]]:
        """Least rotation of a circular word by Booth's failure-function scan.

        Returns the least start index achieving the minimum, and the rotated word.
        """
        size = len(w)
        if size == 0:
            raise ValueError("min_rotation of an empty word")
        doubled = list(w) + list(w)
        failure = [-1] * len(doubled)
        k = 0
        for j in range(1, len(doubled)):
            symbol = doubled[j]
            i = failure[j - k - 1]
            while i != -1 and symbol != doubled[k + i + 1]:
                if symbol < doubled[k + i + 1]:
                    k = j - i - 1
                i = failure[i]
            if symbol != doubled[k + i + 1]:
                # i == -1 here
                if symbol < doubled[k]:
                    k = j
                failure[j - k] = -1
            else:
                failure[j - k] = i + 1
        k %= size
        canonical = doubled[k:k + size]
        # a periodic word attains its minimum at every period; report the first
        start = k % ChordService._smallest_period(canonical)
        return start, canonical

    @staticmethod
    def _smallest_period(word: Sequence[int]) -> int:
        size = len(word)
        prefix = [0] * size
        for i in range(1, size):
            j = prefix[i - 1]
            while j and word[i] != word[j]:
                j = prefix[j - 1]
            if word[i] == word[j]:
                j += 1
            prefix[i] = j
        period = size - prefix[-1]
        return period if size % period == 0 else size

    @staticmethod
    def canon_rep(r: CircleRep, colors: Sequence[int]) -> Encoding:
        """Canonical encoding of a colored representation: the least rotation of its lambda word"""
        word = ChordService.lambda_encoding(r, colors)
        start, canonical = ChordService.min_rotation(word.values)
        if start % 2:
            raise RepresentationError("least rotation of a lambda word must start at a gap")
        return canonical

    @staticmethod
    def random_rep(n: int, seed: Optional[int] = None) -> CircleRep:
        """Uniformly random chord diagram on n chords, deterministic per seed"""
        if n < 1:
            raise ValueError("random_rep needs at least one chord")
        rng = np.random.default_rng(seed)
        permutation = rng.permutation(2 * n)
        word = [0] * (2 * n)
        for chord in range(n):
            word[permutation[2 * chord]] = chord
            word[permutation[2 * chord + 1]] = chord
        return _build_rep(ChordService.parse_rep(word).word)


chord_service = ChordService()

parse_rep = chord_service.parse_rep
interleaving_graph = chord_service.interleaving_graph
reverse_rep = chord_service.reverse_rep
rotate_rep = chord_service.rotate_rep
relabel_rep = chord_service.relabel_rep
restrict_rep = chord_service.restrict_rep
lambda_encoding = chord_service.lambda_encoding
rep_from_lambda = chord_service.rep_from_lambda
min_rotation = chord_service.min_rotation
canon_rep = chord_service.canon_rep
random_rep = chord_service.random_rep
