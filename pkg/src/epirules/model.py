"""Core domain types and shared predicates for episode rule mining.

Events are non-negative integer ids, timestamps are positive integer ticks.
An episode is an ordered tuple of event ids expected at strictly increasing
timestamps; a fixed-gap consequent additionally carries exact inter-event
gaps.  All types here are immutable and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence


class MiningConfigError(ValueError):
    """Raised when mining parameters are internally inconsistent."""


_EMPTY_SLOT: frozenset[int] = frozenset()


@dataclass(frozen=True)
class EventSequence:
    """A single timeline of timestamped event sets.

    ``slots[k]`` holds the event set at timestamp ``k + 1``; timestamps are
    dense 1-based ticks.  Slots may be empty and duplicate ids within one
    slot are collapsed (slots are sets).
    """

    slots: tuple[frozenset[int], ...]

    @classmethod
    def from_slots(cls, slots: Iterable[Iterable[int]]) -> "EventSequence":
        frozen = []
        for slot in slots:
            items = frozenset(slot)
            for e in items:
                if e < 0:
                    raise ValueError(f"negative event id {e}")
            frozen.append(items)
        return cls(tuple(frozen))

    @property
    def begin_time(self) -> int:
        return 1

    @property
    def end_time(self) -> int:
        return len(self.slots)

    @cached_property
    def alphabet(self) -> frozenset[int]:
        out: set[int] = set()
        for slot in self.slots:
            out |= slot
        return frozenset(out)

    @cached_property
    def columns(self) -> dict[int, tuple[int, ...]]:
        """Per-event sorted occurrence timestamps."""
        cols: dict[int, list[int]] = {}
        for idx, slot in enumerate(self.slots):
            for e in slot:
                cols.setdefault(e, []).append(idx + 1)
        return {e: tuple(ts) for e, ts in cols.items()}

    def events_at(self, t: int) -> frozenset[int]:
        """Event set at timestamp ``t``; empty outside [1, end_time]."""
        if 1 <= t <= len(self.slots):
            return self.slots[t - 1]
        return _EMPTY_SLOT

    def times_of(self, event: int) -> tuple[int, ...]:
        return self.columns.get(event, ())


def contains_subsequence(container: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff ``pattern`` embeds into ``container`` preserving order.

    Greedy left-to-right matching; an empty pattern embeds everywhere.
    """
    it = iter(container)
    return all(any(c == p for c in it) for p in pattern)


def rule_confidence(rule_support: int, antecedent_support: int) -> Fraction:
    """Exact rule confidence ``rule_support / antecedent_support``."""
    if antecedent_support < 1:
        raise ValueError("antecedent support must be positive")
    if rule_support < 0:
        raise ValueError("rule support must be non-negative")
    return Fraction(rule_support, antecedent_support)


def occurrence_span(occ: Sequence[int]) -> int:
    """Last timestamp minus first; 0 for a single-event occurrence."""
    if not occ:
        raise ValueError("empty occurrence")
    return occ[-1] - occ[0]


def check_occurrence(times: Sequence[int]) -> tuple[int, ...]:
    """Validate strict monotonicity of an occurrence time vector."""
    out = tuple(times)
    if not out:
        raise ValueError("empty occurrence")
    for a, b in zip(out, out[1:]):
        if b <= a:
            raise ValueError(f"occurrence times not strictly increasing: {out}")
    return out


@dataclass(frozen=True, order=True)
class EpisodeRule:
    """antecedent --elapse--> (consequent events, consequent gaps).

    ``elapse`` is the delay from the antecedent's end to the first consequent
    event; ``gaps`` are the exact delays between consecutive consequent
    events (empty for a single-event consequent).  Field order doubles as
    the canonical sort key.
    """

    antecedent: tuple[int, ...]
    elapse: int
    consequent: tuple[int, ...]
    gaps: tuple[int, ...]
    support: int = field(compare=False)
    confidence: Fraction = field(compare=False)

    def __post_init__(self) -> None:
        if self.elapse < 1:
            raise ValueError("elapse must be >= 1")
        if len(self.gaps) != len(self.consequent) - 1:
            raise ValueError("gap list must have one entry less than the consequent")
        if any(g < 1 for g in self.gaps):
            raise ValueError("gaps must be >= 1")

    @property
    def key(self) -> tuple:
        return (self.antecedent, self.elapse, self.consequent, self.gaps)

    @property
    def total_span(self) -> int:
        return self.elapse + sum(self.gaps)

    def format_line(self) -> str:
        ante = ",".join(str(e) for e in self.antecedent)
        cons = ",".join(str(e) for e in self.consequent)
        gaps = ",".join(str(g) for g in self.gaps)
        conf = self.confidence.numerator / self.confidence.denominator
        return (
            f"<{ante}> -{self.elapse}-> (<{cons}>,<{gaps}>)"
            f" #SUP: {self.support} #CONF: {conf:.4f}"
        )


@dataclass(frozen=True)
class MiningParams:
    """User parameters of one mining run.

    ``strategies`` is the cumulative pruning level 0..4: 0 is post-processing
    only, each increment enables the next strategy in order (end-time
    pre-expansion filtering, root-distance gating, node deactivation, short
    rule suppression).
    """

    query: tuple[int, ...]
    min_sup: int
    min_conf: Fraction
    delta: int
    epsilon: int
    strategies: int = 4

    def validate(self) -> None:
        if len(self.query) < 1:
            raise MiningConfigError("query episode must be non-empty")
        if self.min_sup < 1:
            raise MiningConfigError("min_sup must be >= 1")
        if not 0 < self.min_conf <= 1:
            raise MiningConfigError("min_conf must be in (0, 1]")
        if self.delta < 1:
            raise MiningConfigError("delta must be >= 1")
        if self.epsilon < 1:
            raise MiningConfigError("epsilon must be >= 1")
        if self.strategies not in range(5):
            raise MiningConfigError("strategies must be between 0 and 4")
        if self.epsilon < len(self.query):
            raise MiningConfigError(
                "epsilon must be at least the query length: no consequent of "
                f"span <= {self.epsilon} can contain a {len(self.query)}-event query"
            )
