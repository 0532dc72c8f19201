"""Figures written next to the delimited CLI output: sweep summaries and X_R support plots."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path
from typing import Iterable, Mapping

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .richardson import RichardsonMatrix  # noqa: E402


def plot_sweep(rows: Iterable[Mapping], path: Path | str, title: str = "") -> Path:
    """Stacked bars of nice / not nice colorings per rank, disagreements marked in red."""
    nice: dict[int, int] = defaultdict(int)
    other: dict[int, int] = defaultdict(int)
    bad: dict[int, int] = defaultdict(int)
    for row in rows:
        rank = int(row["rank"])
        if row["closed_form"]:
            nice[rank] += 1
        else:
            other[rank] += 1
        if not row["agree"]:
            bad[rank] += 1
    ranks = sorted(set(nice) | set(other))
    fig, ax = plt.subplots(figsize=(6, 3.6))
    ax.bar(ranks, [nice[r] for r in ranks], color="#4c72b0", label="nice")
    ax.bar(ranks, [other[r] for r in ranks], bottom=[nice[r] for r in ranks], color="#c9c9c9", label="not nice")
    for r in ranks:
        if bad[r]:
            ax.annotate(f"{bad[r]} disagree", (r, nice[r] + other[r]), ha="center", va="bottom", color="red", fontsize=8)
    ax.set_xlabel("rank")
    ax.set_ylabel("colorings")
    ax.set_xticks(ranks)
    ax.set_title(title)
    ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out


def plot_richardson(matrix: RichardsonMatrix, path: Path | str, title: str = "") -> Path:
    """Support of X_R with the Levi block grid drawn in."""
    n = matrix.size
    grid = [[0] * n for _ in range(n)]
    for (i, j), v in matrix.entries.items():
        grid[i - 1][j - 1] = v
    cmap = ListedColormap(["#d62728", "#ffffff", "#1f77b4"])
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    ax.imshow(grid, cmap=cmap, vmin=-1, vmax=1)
    edge = -0.5
    for b in matrix.blocks[:-1]:
        edge += b
        ax.axhline(edge, color="0.6", lw=0.8)
        ax.axvline(edge, color="0.6", lw=0.8)
    ax.set_xticks(range(n))
    ax.set_yticks(range(n))
    ax.set_xticklabels(range(1, n + 1), fontsize=7)
    ax.set_yticklabels(range(1, n + 1), fontsize=7)
    ax.set_title(title or f"X_R for {matrix.lie_type} {','.join(map(str, matrix.blocks))}", fontsize=9)
    fig.tight_layout()
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=120)
    plt.close(fig)
    return out
