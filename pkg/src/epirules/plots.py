"""Figure rendering for benchmark sweeps.

Renders summary figures next to the bench CSV: candidate counts and wall
time per strategy level (one line per confidence threshold), and final rule
counts per confidence threshold.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def render_bench_figures(
    rows: Sequence[dict],
    out_dir: Union[str, Path],
) -> list[Path]:
    """Render bench figures from CSV-shaped rows; returns the file paths.

    Each row needs keys: dataset, minconf, mask, candidates, rules, wall_ms.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if not rows:
        return []
    dataset = rows[0]["dataset"]
    confs = sorted({row["minconf"] for row in rows}, key=float)
    written = []

    def per_conf(metric):
        series = {}
        for conf in confs:
            pts = sorted(
                (row["mask"], row[metric]) for row in rows if row["minconf"] == conf
            )
            series[conf] = pts
        return series

    for metric, ylabel, fname in (
        ("candidates", "candidate rules", "candidates_by_mask.png"),
        ("wall_ms", "wall time (ms)", "runtime_by_mask.png"),
    ):
        fig, ax = plt.subplots(figsize=(6, 4))
        for conf, pts in per_conf(metric).items():
            ax.plot([m for m, _ in pts], [v for _, v in pts], marker="o",
                    label=f"minconf={conf}")
        ax.set_xlabel("pruning strategies enabled")
        ax.set_ylabel(ylabel)
        ax.set_title(dataset)
        ax.set_xticks(sorted({row["mask"] for row in rows}))
        ax.legend()
        fig.tight_layout()
        path = out_dir / fname
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)

    fig, ax = plt.subplots(figsize=(6, 4))
    full_mask = max(row["mask"] for row in rows)
    xs, ys = [], []
    for conf in confs:
        for row in rows:
            if row["minconf"] == conf and row["mask"] == full_mask:
                xs.append(float(conf))
                ys.append(row["rules"])
    ax.plot(xs, ys, marker="s", color="tab:green")
    ax.set_xlabel("minconf")
    ax.set_ylabel("valid rules")
    ax.set_title(dataset)
    fig.tight_layout()
    path = out_dir / "rules_by_minconf.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    written.append(path)
    return written
