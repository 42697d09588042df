"""End-to-end mining orchestration and statistics.

Pipeline: build the query index, mine frequent minimal-occurrence
antecedents, grow one rule tree per antecedent under the requested pruning
level, then post-filter candidates down to rules whose consequent contains
the query.  The final rule set is identical for every strategy level 0..4;
only the amount of intermediate work differs.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .meo import MinimalOccurrenceRecord, mine_frequent_meo
from .model import EpisodeRule, EventSequence, MiningParams, contains_subsequence
from .qindex import QueryIndex, build_query_index, filter_end_times
from .tree import grow_tree


@dataclass
class MiningStats:
    strategy_mask: int
    antecedents_mined: int = 0
    antecedents_surviving_pbps: int = 0
    candidates: int = 0
    rules: int = 0
    pruned_pbps: int = 0
    pruned_dbps: int = 0
    pruned_nbps: int = 0
    pruned_lbps: int = 0
    wall_ms: int = 0
    query_absent: bool = False

    def as_dict(self) -> dict:
        return {
            "strategy_mask": self.strategy_mask,
            "antecedents_mined": self.antecedents_mined,
            "antecedents_surviving_pbps": self.antecedents_surviving_pbps,
            "candidates": self.candidates,
            "rules": self.rules,
            "pruned_pbps": self.pruned_pbps,
            "pruned_dbps": self.pruned_dbps,
            "pruned_nbps": self.pruned_nbps,
            "pruned_lbps": self.pruned_lbps,
            "wall_ms": self.wall_ms,
            "query_absent": self.query_absent,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MiningStats":
        return cls(**data)


@dataclass
class MiningResult:
    rules: list[EpisodeRule]
    stats: MiningStats


def target_filter(
    candidates: Sequence[EpisodeRule],
    query: Sequence[int],
) -> list[EpisodeRule]:
    """Retain candidates whose consequent contains the query episode."""
    query = tuple(query)
    return [r for r in candidates if contains_subsequence(r.consequent, query)]


def _mine_antecedent(
    seq: EventSequence,
    params: MiningParams,
    index: QueryIndex,
    record: MinimalOccurrenceRecord,
) -> tuple[list[EpisodeRule], int, int, int, int, int]:
    """Returns (candidates, pbps_dropped, survived, dbps, nbps, lbps)."""
    end_times = record.end_times
    if params.strategies >= 1:
        kept, max_first, max_last = filter_end_times(end_times, index)
        dropped = len(end_times) - len(kept)
        if not kept:
            return [], dropped, 0, 0, 0, 0
    else:
        kept = list(end_times)
        dropped = 0
    if params.strategies < 2:
        max_first = max_last = params.epsilon
    # Confidence denominators use the support on the whole sequence, not the
    # filtered anchor count, so every strategy level agrees with level 0.
    min_freq = record.support * params.min_conf
    tree = grow_tree(
        seq,
        params.query,
        record.episode,
        record.support,
        kept,
        max_first,
        max_last,
        min_freq,
        params.epsilon,
        params.strategies,
    )
    return (
        tree.emitted,
        dropped,
        1,
        tree.pruned_dbps,
        tree.pruned_nbps,
        tree.pruned_lbps,
    )


def mine(
    seq: EventSequence,
    params: MiningParams,
    threads: int = 1,
) -> MiningResult:
    """Mine all valid targeted precise-positioning rules from ``seq``."""
    params.validate()
    start = time.perf_counter()
    stats = MiningStats(strategy_mask=params.strategies)
    if not set(params.query) <= seq.alphabet:
        stats.query_absent = True
        stats.wall_ms = int((time.perf_counter() - start) * 1000)
        return MiningResult([], stats)
    index = build_query_index(seq, params.query, params.epsilon)
    records = mine_frequent_meo(seq, params.min_sup, params.delta)
    stats.antecedents_mined = len(records)

    def job(record: MinimalOccurrenceRecord):
        return _mine_antecedent(seq, params, index, record)

    if threads > 1 and len(records) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(job, records))
    else:
        outcomes = [job(r) for r in records]

    candidates: list[EpisodeRule] = []
    for emitted, dropped, survived, dbps, nbps, lbps in outcomes:
        candidates.extend(emitted)
        stats.pruned_pbps += dropped
        stats.antecedents_surviving_pbps += survived
        stats.pruned_dbps += dbps
        stats.pruned_nbps += nbps
        stats.pruned_lbps += lbps
    stats.candidates = len(candidates)
    rules = target_filter(candidates, params.query)
    deduped: dict[tuple, EpisodeRule] = {}
    for rule in rules:
        deduped.setdefault(rule.key, rule)
    ordered = sorted(deduped.values(), key=lambda r: r.key)
    stats.rules = len(ordered)
    stats.wall_ms = int((time.perf_counter() - start) * 1000)
    return MiningResult(ordered, stats)
