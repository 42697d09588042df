#!/usr/bin/env python3
"""Record candidate and rule counts on externally supplied SPMF datasets.

This is a documentation aid, not a test: published counts for the classic
retail and click-stream corpora depend on preprocessing choices (event id
remapping, timestamp densification, truncation) that ship with neither the
datasets nor this package, so absolute numbers are not expected to match
any external table.  The script simply runs every pruning level on the
given file and prints one CSV row per level.

Example:
    python3 scripts/spmf_counts.py retail.txt --format spmf \
        --query "39 48" --min-sup 500 --min-conf 0.1 --delta 3 --epsilon 6
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from epirules import MiningParams, mine
from epirules.cli import parse_conf, parse_episode
from epirules.io import load_sequence


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("dataset")
    ap.add_argument("--format", choices=("plain", "spmf"), default="spmf")
    ap.add_argument("--query", required=True)
    ap.add_argument("--min-sup", type=int, required=True)
    ap.add_argument("--min-conf", required=True)
    ap.add_argument("--delta", type=int, required=True)
    ap.add_argument("--epsilon", type=int, required=True)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    seq = load_sequence(args.dataset, args.format)
    name = Path(args.dataset).stem
    print("dataset,mask,antecedents,candidates,rules,wall_ms")
    for mask in range(5):
        params = MiningParams(
            query=parse_episode(args.query),
            min_sup=args.min_sup,
            min_conf=parse_conf(args.min_conf),
            delta=args.delta,
            epsilon=args.epsilon,
            strategies=mask,
        )
        stats = mine(seq, params, threads=args.threads).stats
        print(
            f"{name},{mask},{stats.antecedents_mined},"
            f"{stats.candidates},{stats.rules},{stats.wall_ms}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
