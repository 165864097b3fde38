"""Brute-force reference implementations.

Nothing here calls the fast paths: every oracle walks its own adjacency matrix so that
agreement between the two is a genuine cross-check.
"""
import logging
from itertools import combinations, permutations
from typing import Iterator, List, Optional, Sequence, Tuple

from ..core.config import settings
from ..core.exceptions import OracleLimitError
from ..schemas.chord import CircleRep
from ..schemas.graph import ColoredGraph
from ..schemas.split import Split

logger = logging.getLogger(__name__)


def _matrix(g: ColoredGraph) -> List[List[bool]]:
    matrix = [[False] * g.vertex_count for _ in range(g.vertex_count)]
    for u, v in g.edges:
        matrix[u][v] = matrix[v][u] = True
    return matrix


def _check_limit(name: str, size: int, limit: int) -> None:
    if size > limit:
        raise OracleLimitError(f"{name} handles at most {limit} vertices, got {size}")


class OracleService:
    """Exhaustive checks for small inputs"""

    @staticmethod
    def brute_iso(g: ColoredGraph, h: ColoredGraph) -> bool:
        """Whether a color-preserving isomorphism g -> h exists"""
        limit = settings.ORACLE_ISO_MAX_VERTICES
        _check_limit("brute_iso", max(g.vertex_count, h.vertex_count), limit)
        n = g.vertex_count
        if n != h.vertex_count or len(g.edges) != len(h.edges):
            return False
        gm, hm = _matrix(g), _matrix(h)
        g_profile = [(g.colors[v], sum(gm[v])) for v in range(n)]
        h_profile = [(h.colors[v], sum(hm[v])) for v in range(n)]
        if sorted(g_profile) != sorted(h_profile):
            return False

        image = [-1] * n
        used = [False] * n

        def extend(v: int) -> bool:
            if v == n:
                return True
            for w in range(n):
                if used[w] or h_profile[w] != g_profile[v]:
                    continue
                if any(gm[u][v] != hm[image[u]][w] for u in range(v)):
                    continue
                image[v], used[w] = w, True
                if extend(v + 1):
                    return True
                used[w] = False
            image[v] = -1
            return False

        return extend(0)

    @staticmethod
    def brute_min_rotation(w: Sequence[int]) -> List[int]:
        if not w:
            raise ValueError("brute_min_rotation of an empty word")
        return min(list(w[i:]) + list(w[:i]) for i in range(len(w)))

    @staticmethod
    def brute_splits(g: ColoredGraph) -> List[Split]:
        """Every vertex subset X with 2 <= |X| <= n-2 whose cut is complete bipartite"""
        n = g.vertex_count
        _check_limit("brute_splits", n, settings.ORACLE_SPLITS_MAX_VERTICES)
        matrix = _matrix(g)
        found = []
        for size in range(2, n - 1):
            for x_side in combinations(range(n), size):
                inside = set(x_side)
                outside = [v for v in range(n) if v not in inside]
                a = [u for u in x_side if any(matrix[u][v] for v in outside)]
                b = [v for v in outside if any(matrix[u][v] for u in x_side)]
                if all(matrix[u][v] for u in a for v in b):
                    found.append(Split(
                        a=frozenset(a),
                        b=frozenset(b),
                        a_prime=frozenset(inside - set(a)),
                        b_prime=frozenset(set(outside) - set(b)),
                    ))
        return found

    @staticmethod
    def brute_find_rep(g: ColoredGraph, limit: Optional[int] = None) -> Optional[CircleRep]:
        """A chord diagram whose interleaving graph is g with chord v as vertex v, if any.

        Endpoints are placed left to right. A chord is checked when it closes: the chords
        crossing it are exactly those with one endpoint inside its interval, and chords not
        yet opened cannot cross it.
        """
        n = g.vertex_count
        _check_limit("brute_find_rep", n, limit if limit is not None else settings.ORACLE_REP_MAX_VERTICES)
        if n == 0:
            return CircleRep(word=[])
        matrix = _matrix(g)
        size = 2 * n
        opened = [-1] * n
        closed = [-1] * n
        word: List[int] = []

        def crosses(v: int, u: int) -> bool:
            if opened[u] < 0:
                return False
            starts_inside = opened[u] > opened[v]
            ends_inside = closed[u] > opened[v]
            return starts_inside != ends_inside

        def place(position: int) -> bool:
            if position == size:
                return True
            for v in range(n):
                if opened[v] >= 0 and closed[v] < 0:
                    if all(crosses(v, u) == matrix[v][u] for u in range(n) if u != v):
                        closed[v] = position
                        word.append(v)
                        if place(position + 1):
                            return True
                        word.pop()
                        closed[v] = -1
            for v in range(n):
                if opened[v] < 0 and (position > 0 or v == 0):
                    opened[v] = position
                    word.append(v)
                    if place(position + 1):
                        return True
                    word.pop()
                    opened[v] = -1
            return False

        if not place(0):
            return None
        return CircleRep(word=word)

    @staticmethod
    def enumerate_reps(n: int) -> Iterator[CircleRep]:
        """Every chord diagram on n chords, labeled by first occurrence"""
        size = 2 * n
        word = [-1] * size

        def fill(label: int) -> Iterator[List[int]]:
            if label == n:
                yield list(word)
                return
            first = word.index(-1)
            word[first] = label
            for second in range(first + 1, size):
                if word[second] < 0:
                    word[second] = label
                    yield from fill(label + 1)
                    word[second] = -1
            word[first] = -1

        for filled in fill(0):
            yield CircleRep(word=filled)

    @staticmethod
    def brute_canon(g: ColoredGraph) -> Tuple[Tuple[int, ...], Tuple[Tuple[int, int], ...]]:
        """Least (colors, edges) signature over all vertex orders"""
        n = g.vertex_count
        _check_limit("brute_canon", n, settings.ORACLE_CANON_MAX_VERTICES)
        best = None
        for order in permutations(range(n)):
            position = {v: i for i, v in enumerate(order)}
            colors = tuple(g.colors[v] for v in order)
            edges = tuple(sorted(
                (min(position[u], position[v]), max(position[u], position[v])) for u, v in g.edges
            ))
            candidate = (colors, edges)
            if best is None or candidate < best:
                best = candidate
        return best


oracle_service = OracleService()

brute_iso = oracle_service.brute_iso
brute_min_rotation = oracle_service.brute_min_rotation
brute_splits = oracle_service.brute_splits
brute_find_rep = oracle_service.brute_find_rep
enumerate_reps = oracle_service.enumerate_reps
brute_canon = oracle_service.brute_canon
