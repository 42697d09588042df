"""Deterministic synthetic event sequence generation.

Uses an explicit splitmix64 stream so corpora are bit-identical across runs
and platforms for a fixed spec.  Per timestamp the draw order is fixed:
item count, item ids, then the optional planting decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .model import EventSequence

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Reference splitmix64 generator (public-domain constants)."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        """Uniform in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def next_below(self, n: int) -> int:
        return self.next_u64() % n


@dataclass(frozen=True)
class SyntheticSpec:
    num_timestamps: int
    alphabet_size: int
    avg_items: int
    max_items: int
    planted_query: Optional[tuple[int, ...]] = None
    plant_rate: float = 0.0
    seed: int = 0

    def validate(self) -> None:
        if self.num_timestamps < 1:
            raise ValueError("num_timestamps must be >= 1")
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be >= 1")
        if not 1 <= self.avg_items <= self.max_items:
            raise ValueError("need 1 <= avg_items <= max_items")
        if not 0.0 <= self.plant_rate <= 1.0:
            raise ValueError("plant_rate must be in [0, 1]")
        if self.planted_query is not None and not self.planted_query:
            raise ValueError("planted_query must be non-empty when given")


def generate_synthetic(spec: SyntheticSpec) -> EventSequence:
    """Generate the sequence for ``spec``; pure function of the spec.

    Item counts follow a geometric distribution with mean ``avg_items``
    capped at ``max_items``; item ids are uniform over 1..alphabet_size.
    When a query is planted, each timestamp t that leaves room starts an
    embedding with probability ``plant_rate``: one query event per
    timestamp from t onward.
    """
    spec.validate()
    rng = SplitMix64(spec.seed)
    stop = 1.0 / spec.avg_items
    slots: list[set[int]] = [set() for _ in range(spec.num_timestamps)]
    query = spec.planted_query
    for t in range(1, spec.num_timestamps + 1):
        count = 1
        while count < spec.max_items and rng.next_float() >= stop:
            count += 1
        slot = slots[t - 1]
        for _ in range(count):
            slot.add(1 + rng.next_below(spec.alphabet_size))
        if query is not None and t + len(query) - 1 <= spec.num_timestamps:
            if rng.next_float() < spec.plant_rate:
                for offset, e in enumerate(query):
                    slots[t - 1 + offset].add(e)
    return EventSequence.from_slots(slots)
