"""Sequence loading and rule / statistics output.

Plain format: line k holds the event ids of timestamp k, whitespace
separated; blank lines are empty slots.  SPMF-compatible format: tokens -1
and -2 are separators, every maximal run of non-negative tokens between
separators or line boundaries becomes the next timestamp slot.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Sequence, Union

from .miner import MiningStats
from .model import EpisodeRule, EventSequence

PathLike = Union[str, Path]


class SequenceParseError(ValueError):
    """Malformed sequence file; message carries the offending location."""


def _parse_token(token: str, path: PathLike, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise SequenceParseError(
            f"{path}: line {line_no}: non-integer token {token!r}"
        ) from None


def load_plain(path: PathLike) -> EventSequence:
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines:
        raise SequenceParseError(f"{path}: empty sequence file")
    slots = []
    for line_no, line in enumerate(lines, start=1):
        slot = set()
        for token in line.split():
            value = _parse_token(token, path, line_no)
            if value < 0:
                raise SequenceParseError(
                    f"{path}: line {line_no}: negative event id {value}"
                )
            slot.add(value)
        slots.append(slot)
    return EventSequence.from_slots(slots)


def load_spmf_compat(path: PathLike) -> EventSequence:
    text = Path(path).read_text(encoding="utf-8")
    lines = text.splitlines()
    if not lines:
        raise SequenceParseError(f"{path}: empty sequence file")
    slots: list[set[int]] = []
    for line_no, line in enumerate(lines, start=1):
        run: set[int] = set()
        for token in line.split():
            value = _parse_token(token, path, line_no)
            if value in (-1, -2):
                if run:
                    slots.append(run)
                    run = set()
            elif value < 0:
                raise SequenceParseError(
                    f"{path}: line {line_no}: unexpected negative token {value}"
                )
            else:
                run.add(value)
        if run:
            slots.append(run)
    if not slots:
        raise SequenceParseError(f"{path}: no event slots in file")
    return EventSequence.from_slots(slots)


def load_sequence(path: PathLike, fmt: str = "plain") -> EventSequence:
    if fmt == "plain":
        return load_plain(path)
    if fmt == "spmf":
        return load_spmf_compat(path)
    raise ValueError(f"unknown sequence format {fmt!r}")


def write_plain(seq: EventSequence, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for t in range(1, seq.end_time + 1):
            fh.write(" ".join(str(e) for e in sorted(seq.events_at(t))))
            fh.write("\n")


def write_rules(rules: Iterable[EpisodeRule], path: PathLike) -> None:
    """One rule per line in the canonical line grammar, LF endings."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rule in rules:
            fh.write(rule.format_line())
            fh.write("\n")


def write_stats(stats: MiningStats, path: PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(stats.as_dict(), fh, indent=2)
        fh.write("\n")


def read_stats(path: PathLike) -> MiningStats:
    with open(path, encoding="utf-8") as fh:
        return MiningStats.from_dict(json.load(fh))
