"""Range-minimum queries, threshold scans, and interval partitioning.

All structures here operate on frozen 1-based integer arrays (slot 0 is
padding).  The sparse table costs O(n log n) words and answers range minima
in O(1); the threshold scans run a binary descent over it in O(log n).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyArrayError, InvalidPositionError, InvalidRangeError


@dataclass
class QueryStats:
    """Per-query instrumentation counters.

    Each query owns its own instance; structures never share one, so
    concurrent read-only queries stay independent.
    """

    rmq_calls: int = 0
    psv_calls: int = 0
    nsv_calls: int = 0
    sa_accesses: int = 0

    def reset(self) -> None:
        self.rmq_calls = 0
        self.psv_calls = 0
        self.nsv_calls = 0
        self.sa_accesses = 0

    @property
    def structure_calls(self) -> int:
        """Total counted calls into the range structures."""
        return self.rmq_calls + self.psv_calls + self.nsv_calls


class RmqStructure:
    """Sparse-table range minimum over a frozen 1-based integer array.

    Ties resolve to the leftmost position so every answer is deterministic.
    The input array is kept by reference and must not change afterwards.
    """

    def __init__(self, array: list[int]):
        n = len(array) - 1
        if n < 1:
            raise EmptyArrayError("range-minimum structure needs n >= 1")
        self.array = array
        self.n = n
        vals = np.asarray(array[1:], dtype=np.int64)
        pos = np.arange(1, n + 1, dtype=np.int64)
        val_rows = [vals]
        pos_rows = [pos]
        width = 2
        while width <= n:
            half = width // 2
            span = n - width + 1
            lo_v = val_rows[-1][:span]
            hi_v = val_rows[-1][half:half + span]
            take_lo = lo_v <= hi_v
            val_rows.append(np.where(take_lo, lo_v, hi_v))
            pos_rows.append(
                np.where(take_lo, pos_rows[-1][:span], pos_rows[-1][half:half + span])
            )
            width *= 2
        self._vals = [row.tolist() for row in val_rows]
        self._pos = [row.tolist() for row in pos_rows]

    def _argmin(self, i: int, j: int) -> int:
        # Uncounted internal lookup over two overlapping power-of-two blocks.
        k = (j - i + 1).bit_length() - 1
        a = i - 1
        b = j - (1 << k)
        va = self._vals[k][a]
        vb = self._vals[k][b]
        if vb < va:
            return self._pos[k][b]
        if va < vb:
            return self._pos[k][a]
        return min(self._pos[k][a], self._pos[k][b])

    def rmq(self, i: int, j: int, stats: QueryStats | None = None) -> int:
        """Leftmost position of the minimum value in ``array[i..j]``."""
        if not 1 <= i <= j <= self.n:
            raise InvalidRangeError(f"rmq range [{i}..{j}] outside 1..{self.n}")
        if stats is not None:
            stats.rmq_calls += 1
        return self._argmin(i, j)

    def psv(self, p: int, d: int, stats: QueryStats | None = None) -> int:
        """Largest ``q < p`` with ``array[q] < d``, or 0 when none exists."""
        if not 1 <= p <= self.n + 1:
            raise InvalidPositionError(f"psv position {p} outside 1..{self.n + 1}")
        if stats is not None:
            stats.psv_calls += 1
        hi = p - 1
        if hi < 1 or self.array[self._argmin(1, hi)] >= d:
            return 0
        lo = 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self.array[self._argmin(mid, hi)] < d:
                lo = mid
            else:
                hi = mid - 1
        return lo

    def nsv(self, p: int, d: int, stats: QueryStats | None = None) -> int:
        """Smallest ``q > p`` with ``array[q] < d``, or ``n + 1`` when none."""
        if not 0 <= p <= self.n:
            raise InvalidPositionError(f"nsv position {p} outside 0..{self.n}")
        if stats is not None:
            stats.nsv_calls += 1
        lo = p + 1
        hi = self.n
        if lo > hi or self.array[self._argmin(lo, hi)] >= d:
            return self.n + 1
        while lo < hi:
            mid = (lo + hi) // 2
            if self.array[self._argmin(lo, mid)] < d:
                hi = mid
            else:
                lo = mid + 1
        return lo


def partition_interval(
    struct: RmqStructure,
    lo: int,
    hi: int,
    threshold: int,
    stats: QueryStats | None = None,
) -> list[tuple[int, int]]:
    """Split ``[lo..hi]`` at every interior position with value < threshold.

    Returns maximal consecutive subintervals covering the range: the first
    starts at ``lo`` and each further start is a position in ``(lo..hi]``
    whose array value falls below the threshold.  Runs O(k) counted rmq
    calls for k returned parts (at most 2k - 1).
    """
    if threshold < 1 or not 1 <= lo <= hi <= struct.n:
        raise InvalidRangeError(
            f"partition range [{lo}..{hi}] at depth {threshold} is invalid"
        )
    splits: list[int] = []
    pending = [(lo + 1, hi)]
    while pending:
        s, e = pending.pop()
        if s > e:
            continue
        p = struct.rmq(s, e, stats)
        if struct.array[p] < threshold:
            splits.append(p)
            pending.append((s, p - 1))
            pending.append((p + 1, e))
    splits.sort()
    starts = [lo, *splits]
    parts = []
    for idx, start in enumerate(starts):
        end = starts[idx + 1] - 1 if idx + 1 < len(starts) else hi
        parts.append((start, end))
    return parts
