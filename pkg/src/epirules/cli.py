"""Command-line front end.

Subcommands: ``mine`` (single run), ``bench`` (strategy x confidence sweep
to CSV, optionally with figures), ``gen`` (synthetic corpus), ``verify``
(all strategy levels against the brute-force reference).  Exit codes: 0
success, 1 I/O failure, 2 configuration or parse error, 3 verification
divergence.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction
from pathlib import Path

from .io import (
    SequenceParseError,
    load_sequence,
    write_plain,
    write_rules,
    write_stats,
)
from .miner import mine
from .model import MiningConfigError, MiningParams
from .oracle import OracleScaleError, brute_force_mine
from .synth import SyntheticSpec, generate_synthetic

BENCH_HEADER = "dataset,minconf,mask,candidates,rules,wall_ms"


def parse_episode(text: str) -> tuple[int, ...]:
    tokens = [tok for tok in re.split(r"[,\s]+", text.strip()) if tok]
    if not tokens:
        raise MiningConfigError("empty episode")
    try:
        events = tuple(int(tok) for tok in tokens)
    except ValueError:
        raise MiningConfigError(f"episode must be a list of integers: {text!r}") from None
    if any(e < 0 for e in events):
        raise MiningConfigError(f"episode events must be non-negative: {text!r}")
    return events


def parse_conf(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise MiningConfigError(f"invalid confidence value {text!r}") from None
    return value


def _add_mining_args(
    sub: argparse.ArgumentParser,
    with_strategies: bool = True,
    with_conf: bool = True,
) -> None:
    sub.add_argument("--input", required=True, help="sequence file")
    sub.add_argument("--format", choices=("plain", "spmf"), default="plain")
    sub.add_argument("--query", required=True, help="query episode, e.g. '3 6' or '3,6'")
    sub.add_argument("--min-sup", type=int, required=True)
    if with_conf:
        sub.add_argument("--min-conf", required=True, help="confidence floor, e.g. 0.5")
    sub.add_argument("--delta", type=int, required=True, help="antecedent span bound")
    sub.add_argument("--epsilon", type=int, required=True, help="consequent span bound")
    if with_strategies:
        sub.add_argument(
            "--strategies", type=int, default=4, choices=range(5),
            help="cumulative pruning level 0-4",
        )
    sub.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epirules",
        description="Targeted mining of precise-positioning episode rules",
    )
    subs = parser.add_subparsers(dest="mode", required=True)

    p_mine = subs.add_parser("mine", help="mine one configuration")
    _add_mining_args(p_mine)
    p_mine.add_argument("--output", required=True, help="rule output file")
    p_mine.add_argument("--stats", help="optional stats JSON file")

    p_verify = subs.add_parser(
        "verify", help="cross-check all strategy levels against the brute-force miner"
    )
    _add_mining_args(p_verify, with_strategies=False)
    p_verify.add_argument("--max-timestamps", type=int, default=40)
    p_verify.add_argument("--max-alphabet", type=int, default=8)

    p_gen = subs.add_parser("gen", help="generate a synthetic corpus")
    p_gen.add_argument("--output", required=True)
    p_gen.add_argument("--timestamps", type=int, required=True)
    p_gen.add_argument("--alphabet", type=int, required=True)
    p_gen.add_argument("--avg-items", type=int, default=1)
    p_gen.add_argument("--max-items", type=int, default=None)
    p_gen.add_argument("--plant-query", default=None)
    p_gen.add_argument("--plant-rate", type=float, default=0.0)
    p_gen.add_argument("--seed", type=int, default=0)

    p_bench = subs.add_parser(
        "bench", help="sweep strategy levels and confidence thresholds to CSV"
    )
    _add_mining_args(p_bench, with_strategies=False, with_conf=False)
    p_bench.add_argument(
        "--min-confs", nargs="+", required=True,
        help="confidence values to sweep",
    )
    p_bench.add_argument("--output", required=True, help="CSV output file")
    p_bench.add_argument("--figures", help="optional directory for rendered figures")
    return parser


def _params(args: argparse.Namespace, strategies: int) -> MiningParams:
    return MiningParams(
        query=parse_episode(args.query),
        min_sup=args.min_sup,
        min_conf=parse_conf(args.min_conf),
        delta=args.delta,
        epsilon=args.epsilon,
        strategies=strategies,
    )


def _run_mine(args: argparse.Namespace) -> int:
    seq = load_sequence(args.input, args.format)
    params = _params(args, args.strategies)
    result = mine(seq, params, threads=args.threads)
    write_rules(result.rules, args.output)
    if args.stats:
        write_stats(result.stats, args.stats)
    print(f"{len(result.rules)} rules -> {args.output}")
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    seq = load_sequence(args.input, args.format)
    expected = brute_force_mine(
        seq,
        _params(args, 0),
        max_timestamps=args.max_timestamps,
        max_alphabet=args.max_alphabet,
    )
    for mask in range(5):
        result = mine(seq, _params(args, mask), threads=args.threads)
        if result.rules != expected:
            got = {r.key: r for r in result.rules}
            want = {r.key: r for r in expected}
            for key in sorted(set(got) | set(want)):
                if got.get(key) != want.get(key):
                    print(
                        f"divergence at strategies={mask}: "
                        f"mined={got.get(key)} expected={want.get(key)}"
                    )
                    break
            return 3
    print(f"all strategy levels agree with the reference ({len(expected)} rules)")
    return 0


def _run_gen(args: argparse.Namespace) -> int:
    planted = parse_episode(args.plant_query) if args.plant_query else None
    max_items = args.max_items if args.max_items is not None else max(args.avg_items, 1)
    spec = SyntheticSpec(
        num_timestamps=args.timestamps,
        alphabet_size=args.alphabet,
        avg_items=args.avg_items,
        max_items=max_items,
        planted_query=planted,
        plant_rate=args.plant_rate,
        seed=args.seed,
    )
    try:
        spec.validate()
    except ValueError as exc:
        raise MiningConfigError(str(exc)) from None
    seq = generate_synthetic(spec)
    write_plain(seq, args.output)
    print(f"{seq.end_time} timestamps -> {args.output}")
    return 0


def _run_bench(args: argparse.Namespace) -> int:
    seq = load_sequence(args.input, args.format)
    dataset = Path(args.input).stem
    rows = []
    for conf_text in args.min_confs:
        conf = parse_conf(conf_text)
        for mask in range(5):
            params = MiningParams(
                query=parse_episode(args.query),
                min_sup=args.min_sup,
                min_conf=conf,
                delta=args.delta,
                epsilon=args.epsilon,
                strategies=mask,
            )
            result = mine(seq, params, threads=args.threads)
            rows.append(
                {
                    "dataset": dataset,
                    "minconf": conf_text,
                    "mask": mask,
                    "candidates": result.stats.candidates,
                    "rules": result.stats.rules,
                    "wall_ms": result.stats.wall_ms,
                }
            )
    with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(BENCH_HEADER + "\n")
        for row in rows:
            fh.write(
                f"{row['dataset']},{row['minconf']},{row['mask']},"
                f"{row['candidates']},{row['rules']},{row['wall_ms']}\n"
            )
    if args.figures:
        from .plots import render_bench_figures

        written = render_bench_figures(rows, args.figures)
        print(f"{len(written)} figures -> {args.figures}")
    print(f"{len(rows)} rows -> {args.output}")
    return 0


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "mine": _run_mine,
        "verify": _run_verify,
        "gen": _run_gen,
        "bench": _run_bench,
    }
    try:
        return handlers[args.mode](args)
    except (MiningConfigError, SequenceParseError, OracleScaleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
