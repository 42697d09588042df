"""Query-episode occurrence index and antecedent pre-expansion windows.

Every embedding of the query inside the consequent span bound epsilon is
collapsed to its (first, last) timestamp pair.  Each pair constrains where a
compatible antecedent may end: in [max(1, last - epsilon), first), since the
consequent must start strictly after the antecedent ends and finish within
epsilon of it.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Optional, Sequence

from .model import EventSequence


@dataclass(frozen=True)
class AntecedentWindow:
    """Half-open end-time interval [lo, hi) compatible with one embedding."""

    lo: int
    hi: int
    first_time: int
    last_time: int


@dataclass(frozen=True)
class QueryIndex:
    query: tuple[int, ...]
    epsilon: int
    occurrences: tuple[tuple[int, int], ...]
    windows: tuple[AntecedentWindow, ...]


def build_query_index(
    seq: EventSequence,
    query: Sequence[int],
    epsilon: int,
) -> QueryIndex:
    """Index all (first, last) embeddings of ``query`` within ``epsilon``.

    Distinct interior embeddings sharing first and last times are collapsed;
    windows that clamp to empty intervals are discarded.
    """
    if not query:
        raise ValueError("query episode must be non-empty")
    if epsilon < 1:
        raise ValueError("epsilon must be >= 1")
    query = tuple(query)
    pairs: list[tuple[int, int]] = []
    if len(query) == 1:
        pairs = [(t, t) for t in seq.times_of(query[0])]
    else:
        last_times = seq.times_of(query[-1])
        for first in seq.times_of(query[0]):
            # Earliest completion of the interior events strictly after the
            # first; any later last-event time then closes an embedding.
            bound = first
            ok = True
            for ev in query[1:-1]:
                times = seq.times_of(ev)
                idx = bisect_left(times, bound + 1)
                if idx == len(times):
                    ok = False
                    break
                bound = times[idx]
            if not ok:
                continue
            lo = bisect_right(last_times, bound)
            hi = bisect_right(last_times, first + epsilon)
            pairs.extend((first, last) for last in last_times[lo:hi])
    pairs.sort()
    windows = []
    for first, last in pairs:
        lo = max(1, last - epsilon)
        if lo < first:
            windows.append(AntecedentWindow(lo, first, first, last))
    windows.sort(key=lambda w: (w.lo, w.hi))
    return QueryIndex(query, epsilon, tuple(pairs), tuple(windows))


def filter_end_times(
    end_times: Sequence[int],
    index: QueryIndex,
) -> tuple[list[int], Optional[int], Optional[int]]:
    """Keep end times covered by some window; track maximum search spans.

    Returns (kept, max_first, max_last) where max_first is the largest
    distance from a kept end time to the first event of a covering embedding
    and max_last the analogue for the last event; both None when nothing is
    kept.  Merge-scan of sorted end times against windows sorted by lo.
    """
    kept: list[int] = []
    max_first: Optional[int] = None
    max_last: Optional[int] = None
    windows = index.windows
    wi = 0
    by_hi: list[tuple[int, int]] = []  # (-first_time, hi), hi == first_time
    by_last: list[tuple[int, int]] = []  # (-last_time, hi)
    for t in end_times:
        while wi < len(windows) and windows[wi].lo <= t:
            w = windows[wi]
            heapq.heappush(by_hi, (-w.first_time, w.hi))
            heapq.heappush(by_last, (-w.last_time, w.hi))
            wi += 1
        while by_hi and by_hi[0][1] <= t:
            heapq.heappop(by_hi)
        while by_last and by_last[0][1] <= t:
            heapq.heappop(by_last)
        if by_hi:
            kept.append(t)
            span_first = -by_hi[0][0] - t
            span_last = -by_last[0][0] - t
            max_first = span_first if max_first is None else max(max_first, span_first)
            max_last = span_last if max_last is None else max(max_last, span_last)
    return kept, max_first, max_last
