"""Targeted mining of precise-positioning episode rules."""

from .meo import (
    MinimalOccurrenceRecord,
    fixed_gap_occurrences,
    mine_frequent_meo,
    minimal_occurrences,
    occurrences,
)
from .miner import MiningResult, MiningStats, mine, target_filter
from .model import (
    EpisodeRule,
    EventSequence,
    MiningConfigError,
    MiningParams,
    contains_subsequence,
    occurrence_span,
    rule_confidence,
)
from .oracle import OracleScaleError, brute_force_mine
from .qindex import QueryIndex, build_query_index, filter_end_times
from .synth import SplitMix64, SyntheticSpec, generate_synthetic

__all__ = [
    "EpisodeRule",
    "EventSequence",
    "MiningConfigError",
    "MiningParams",
    "MiningResult",
    "MiningStats",
    "MinimalOccurrenceRecord",
    "OracleScaleError",
    "QueryIndex",
    "SplitMix64",
    "SyntheticSpec",
    "brute_force_mine",
    "build_query_index",
    "contains_subsequence",
    "filter_end_times",
    "fixed_gap_occurrences",
    "generate_synthetic",
    "mine",
    "mine_frequent_meo",
    "minimal_occurrences",
    "occurrence_span",
    "occurrences",
    "rule_confidence",
    "target_filter",
]
