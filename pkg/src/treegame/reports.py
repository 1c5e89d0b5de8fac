"""Delimited outputs and matplotlib figures for bench and simulation runs.

Every report writes a CSV next to a PNG rendering of the same data, so runs
can be eyeballed quickly and post-processed exactly.
"""
from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def write_csv(path: str | Path, header: list[str], rows: list[list]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def bench_figure(rows: list[dict], outdir: str | Path) -> Path:
    """Relabel counts against n for each variant, with the analytic bounds."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(7, 5))
    by_variant: dict[str, list[dict]] = {}
    for row in rows:
        by_variant.setdefault(row["variant"], []).append(row)
    for variant, vrows in sorted(by_variant.items()):
        vrows.sort(key=lambda r: r["n"])
        ns = [r["n"] for r in vrows]
        ax.loglog(ns, [r["relabels"] for r in vrows], "o-", label=f"{variant} relabels")
    if by_variant:
        ns = sorted({r["n"] for r in rows})
        ax.loglog(ns, [n * math.log2(n) for n in ns], "--", label="n log2 n")
        ax.loglog(
            ns,
            [4 * n * math.log2(math.log2(n)) + 8 * n for n in ns],
            ":",
            label="4 n log2 log2 n + 8 n",
        )
    ax.set_xlabel("n (vertices)")
    ax.set_ylabel("total relabels over a full deletion sequence")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    path = outdir / "bench_decremental.png"
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path


def simulate_figure(rows: list[dict], outdir: str | Path) -> Path:
    """Per-game selection-cost extremes: LCA queries and leaf-list work."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.2))
    idx = range(len(rows))
    ax1.plot(idx, [r["max_alice_queries"] for r in rows], "o", ms=3, label="max LCA queries")
    ax1.axhline(30, color="red", ls="--", lw=1, label="budget 30")
    ax1.set_xlabel("game")
    ax1.set_ylabel("max per-move Alice LCA queries")
    ax1.legend()
    ax2.plot(idx, [r["max_alice_leaf_ops"] for r in rows], "o", ms=3, color="tab:green",
             label="max leaf-list ops")
    ax2.set_xlabel("game")
    ax2.set_ylabel("max per-move leaf-list operations")
    ax2.legend()
    for ax in (ax1, ax2):
        ax.grid(True, alpha=0.3)
    fig.tight_layout()
    path = outdir / "simulate_selection.png"
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path
