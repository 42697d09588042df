"""Brute-force reference miner for correctness testing.

Implements the rule definitions directly: exhaustive antecedent
minimal-occurrence enumeration, literal consequent template enumeration off
each antecedent end time, and direct occurrence counting.  Shares no code
with the tree-based miner beyond the core predicates, so agreement between
the two is meaningful evidence.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .model import EpisodeRule, EventSequence, MiningParams, contains_subsequence


class OracleScaleError(RuntimeError):
    """Input exceeds the configured brute-force bounds."""


def _minimal_occurrences_brute(
    seq: EventSequence,
    episode: tuple[int, ...],
    delta: int,
) -> list[tuple[int, int]]:
    """Per-end-time maximal starts among occurrences with span < delta.

    Occurrences with span >= delta start earlier than any with span < delta
    sharing the end time, so restricting enumeration to the delta window
    still finds the true maximal start whenever the entry survives.
    """
    best: dict[int, int] = {}

    def walk(k: int, first: int, last: int) -> None:
        if k == len(episode):
            if last not in best or first > best[last]:
                best[last] = first
            return
        for t in range(last + 1, first + delta):
            if episode[k] in seq.events_at(t):
                walk(k + 1, first, t)

    for t0 in range(1, seq.end_time + 1):
        if episode[0] in seq.events_at(t0):
            walk(1, t0, t0)
    return sorted((start, end) for end, start in best.items())


def _frequent_antecedents(
    seq: EventSequence,
    min_sup: int,
    delta: int,
) -> list[tuple[tuple[int, ...], list[tuple[int, int]]]]:
    alphabet = sorted(seq.alphabet)
    found = []

    def grow(episode: tuple[int, ...]) -> None:
        mo = _minimal_occurrences_brute(seq, episode, delta)
        if not mo:
            return
        if len(mo) >= min_sup:
            found.append((episode, mo))
        if len(episode) < delta:
            for e in alphabet:
                grow(episode + (e,))

    for e in alphabet:
        grow((e,))
    found.sort(key=lambda item: (len(item[0]), item[0]))
    return found


def _consequent_templates(
    seq: EventSequence,
    anchor: int,
    epsilon: int,
) -> set[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """All (elapse, events, gaps) templates occurring right after ``anchor``."""
    templates: set[tuple[int, tuple[int, ...], tuple[int, ...]]] = set()

    def walk(elapse: int, events: tuple[int, ...], gaps: tuple[int, ...], last: int) -> None:
        templates.add((elapse, events, gaps))
        for t in range(last + 1, anchor + epsilon + 1):
            for e in sorted(seq.events_at(t)):
                walk(elapse, events + (e,), gaps + (t - last,), t)

    for elapse in range(1, epsilon + 1):
        first = anchor + elapse
        if first > seq.end_time:
            break
        for e in sorted(seq.events_at(first)):
            walk(elapse, (e,), (), first)
    return templates


def _template_occurs_at(
    seq: EventSequence,
    anchor: int,
    elapse: int,
    events: tuple[int, ...],
    gaps: tuple[int, ...],
) -> bool:
    t = anchor + elapse
    if events[0] not in seq.events_at(t):
        return False
    for e, g in zip(events[1:], gaps):
        t += g
        if e not in seq.events_at(t):
            return False
    return True


def brute_force_mine(
    seq: EventSequence,
    params: MiningParams,
    max_timestamps: int = 40,
    max_alphabet: int = 8,
) -> list[EpisodeRule]:
    """All valid targeted rules, computed straight from the definitions."""
    params.validate()
    if seq.end_time > max_timestamps:
        raise OracleScaleError(
            f"sequence spans {seq.end_time} timestamps, oracle bound is {max_timestamps}"
        )
    if len(seq.alphabet) > max_alphabet:
        raise OracleScaleError(
            f"alphabet has {len(seq.alphabet)} events, oracle bound is {max_alphabet}"
        )
    if not set(params.query) <= seq.alphabet:
        return []
    out: dict[tuple, EpisodeRule] = {}
    for episode, mo in _frequent_antecedents(seq, params.min_sup, params.delta):
        ends = [end for _, end in mo]
        sp = len(ends)
        templates: set[tuple[int, tuple[int, ...], tuple[int, ...]]] = set()
        for anchor in ends:
            templates |= _consequent_templates(seq, anchor, params.epsilon)
        for elapse, events, gaps in sorted(templates):
            if not contains_subsequence(events, params.query):
                continue
            support = sum(
                1
                for anchor in ends
                if _template_occurs_at(seq, anchor, elapse, events, gaps)
            )
            confidence = Fraction(support, sp)
            if confidence >= params.min_conf:
                rule = EpisodeRule(episode, elapse, events, gaps, support, confidence)
                out[rule.key] = rule
    return sorted(out.values(), key=lambda r: r.key)
