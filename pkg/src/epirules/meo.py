"""Minimal-occurrence episode mining used for rule antecedents.

For every end time at which an episode occurs, the minimal occurrence is the
one with the latest possible start; an episode's support is the number of
such end times whose span stays strictly under the antecedent bound.
Because timestamps strictly increase inside an occurrence, span < delta
bounds episode length by delta, so the prefix-growth frontier is finite.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Optional, Sequence

from .model import EventSequence


class EnumerationCapExceeded(RuntimeError):
    """Raised when a bounded occurrence enumeration overflows its cap."""


@dataclass(frozen=True)
class MinimalOccurrenceRecord:
    """An episode with its minimal occurrences, ascending by end time."""

    episode: tuple[int, ...]
    mo_set: tuple[tuple[int, int], ...]

    @property
    def end_times(self) -> tuple[int, ...]:
        return tuple(end for _, end in self.mo_set)

    @property
    def support(self) -> int:
        return len(self.mo_set)


def occurrences(
    seq: EventSequence,
    episode: Sequence[int],
    cap: Optional[int] = None,
) -> list[tuple[int, ...]]:
    """All strictly increasing time vectors witnessing ``episode``.

    Exhaustive enumeration for test and oracle use; ``cap`` bounds the
    result size when enumerating potentially explosive inputs.
    """
    if not episode:
        raise ValueError("episode must be non-empty")
    out: list[tuple[int, ...]] = []
    cols = [seq.times_of(e) for e in episode]

    def grow(prefix: tuple[int, ...], k: int) -> None:
        if k == len(episode):
            out.append(prefix)
            if cap is not None and len(out) > cap:
                raise EnumerationCapExceeded(
                    f"more than {cap} occurrences of {tuple(episode)}"
                )
            return
        times = cols[k]
        lo = 0 if not prefix else bisect_left(times, prefix[-1] + 1)
        for t in times[lo:]:
            grow(prefix + (t,), k + 1)

    grow((), 0)
    out.sort()
    return out


def fixed_gap_occurrences(
    seq: EventSequence,
    events: Sequence[int],
    gaps: Sequence[int],
) -> list[tuple[int, ...]]:
    """All occurrences of a fixed-gap episode, as full time vectors."""
    if len(gaps) != len(events) - 1:
        raise ValueError("gap list must have one entry less than the events")
    offsets = [0]
    for g in gaps:
        offsets.append(offsets[-1] + g)
    out = []
    for t in seq.times_of(events[0]):
        times = tuple(t + off for off in offsets)
        if all(ev in seq.events_at(tt) for ev, tt in zip(events[1:], times[1:])):
            out.append(times)
    return out


def _latest_embedding(seq: EventSequence, episode: Sequence[int], end: int) -> Optional[int]:
    """Start of the latest embedding of ``episode`` ending exactly at ``end``.

    Backward greedy matching maximizes every position, hence the start.
    Returns None when no occurrence ends at ``end``.
    """
    if episode[-1] not in seq.events_at(end):
        return None
    t = end
    for ev in reversed(episode[:-1]):
        times = seq.times_of(ev)
        idx = bisect_left(times, t)
        if idx == 0:
            return None
        t = times[idx - 1]
    return t


def minimal_occurrences(
    seq: EventSequence,
    episode: Sequence[int],
    delta: int,
) -> MinimalOccurrenceRecord:
    """Per-end-time minimal occurrences of ``episode`` with span < ``delta``."""
    if not episode:
        raise ValueError("episode must be non-empty")
    if delta < 1:
        raise ValueError("delta must be >= 1")
    mo = []
    for end in seq.times_of(episode[-1]):
        start = _latest_embedding(seq, episode, end)
        if start is not None and end - start < delta:
            mo.append((start, end))
    return MinimalOccurrenceRecord(tuple(episode), tuple(mo))


def _extend_children(
    seq: EventSequence,
    record: MinimalOccurrenceRecord,
    delta: int,
) -> list[MinimalOccurrenceRecord]:
    """One-event extensions of ``record`` with non-empty minimal occurrences.

    A child's minimal occurrence ending at t' extends the parent's minimal
    occurrence with the latest end before t'; entries whose span reaches
    delta are dropped, which is lossless because a child span always exceeds
    its parent entry's span.
    """
    ends = [end for _, end in record.mo_set]
    starts = [start for start, _ in record.mo_set]
    candidate_ends: set[int] = set()
    for start, end in record.mo_set:
        hi = min(start + delta, seq.end_time + 1)
        candidate_ends.update(range(end + 1, hi))
    children: dict[int, list[tuple[int, int]]] = {}
    for t in sorted(candidate_ends):
        idx = bisect_left(ends, t) - 1
        start = starts[idx]
        if t - start < delta:
            for e in seq.events_at(t):
                children.setdefault(e, []).append((start, t))
    return [
        MinimalOccurrenceRecord(record.episode + (e,), tuple(entries))
        for e, entries in children.items()
    ]


def mine_frequent_meo(
    seq: EventSequence,
    min_sup: int,
    delta: int,
) -> list[MinimalOccurrenceRecord]:
    """All episodes whose minimal-occurrence support reaches ``min_sup``.

    Prefix growth over end-time lists.  The frontier keeps every episode
    with a non-empty minimal-occurrence set, not only frequent ones, because
    this support measure is not anti-monotone across arbitrary extensions.
    """
    if min_sup < 1:
        raise ValueError("min_sup must be >= 1")
    frontier = []
    for e in sorted(seq.alphabet):
        times = seq.times_of(e)
        frontier.append(
            MinimalOccurrenceRecord((e,), tuple((t, t) for t in times))
        )
    result = []
    while frontier:
        next_frontier = []
        for record in frontier:
            if record.support >= min_sup:
                result.append(record)
            if len(record.episode) < delta:
                next_frontier.extend(_extend_children(seq, record, delta))
        frontier = next_frontier
    result.sort(key=lambda r: (len(r.episode), r.episode))
    return result
