"""Lexicographic sorting of integer sequences by bucket passes.

The classic two-phase scheme: first the distinct symbols of every position are listed in
order, then sequences are distributed into buckets from the last position to the first,
with sequences of length j entering the queue in front when position j is reached.
"""
import logging
from typing import List, Sequence, Tuple

logger = logging.getLogger(__name__)


class SortingService:
    """Bucket-based lexicographic sorting"""

    @staticmethod
    def compact_alphabet(seqs: Sequence[Sequence[int]]) -> Tuple[List[List[int]], int]:
        """Map the values through their sorted order onto a dense range 0..k-1"""
        distinct = sorted({value for seq in seqs for value in seq})
        rank = {value: i for i, value in enumerate(distinct)}
        return [[rank[value] for value in seq] for seq in seqs], len(distinct)

    @staticmethod
    def lex_sort_sequences(seqs: Sequence[Sequence[int]]) -> Tuple[List[int], List[int]]:
        """Sort sequences lexicographically.

        Returns ``(order, ranks)``: ``order`` lists the indices in non-decreasing order and
        ``ranks[i]`` is the number of distinct sequences strictly smaller than ``seqs[i]``.
        A proper prefix sorts before its extensions.
        """
        count = len(seqs)
        if count == 0:
            return [], []

        dense, alphabet = SortingService.compact_alphabet(seqs)
        max_length = max(len(seq) for seq in dense)

        # Distinct symbols per position, in increasing order: bucket the (position, symbol)
        # pairs by symbol, then by position.
        by_symbol: List[List[int]] = [[] for _ in range(alphabet)]
        for seq in dense:
            for position, symbol in enumerate(seq):
                by_symbol[symbol].append(position)
        nonempty: List[List[int]] = [[] for _ in range(max_length)]
        for symbol, positions in enumerate(by_symbol):
            for position in positions:
                column = nonempty[position]
                if not column or column[-1] != symbol:
                    column.append(symbol)

        by_length: List[List[int]] = [[] for _ in range(max_length + 1)]
        for index, seq in enumerate(dense):
            by_length[len(seq)].append(index)

        buckets: List[List[int]] = [[] for _ in range(alphabet)]
        queue: List[int] = []
        for position in range(max_length - 1, -1, -1):
            queue = by_length[position + 1] + queue
            for index in queue:
                buckets[dense[index][position]].append(index)
            queue = []
            for symbol in nonempty[position]:
                queue.extend(buckets[symbol])
                buckets[symbol] = []
        order = by_length[0] + queue

        ranks = [0] * count
        rank = 0
        for previous, current in zip(order, order[1:]):
            if dense[previous] != dense[current]:
                rank += 1
            ranks[current] = rank
        logger.debug(f"sorted {count} sequences over {alphabet} symbols into {rank + 1} classes")
        return order, ranks


sorting_service = SortingService()

lex_sort_sequences = sorting_service.lex_sort_sequences
