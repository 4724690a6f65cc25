"""Figures written next to the text reports (matplotlib, file output only)."""
from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .graph import Graph  # noqa: E402


def circle_layout(n: int) -> list[tuple[float, float]]:
    return [(math.cos(2 * math.pi * i / max(n, 1) + math.pi / 2),
             math.sin(2 * math.pi * i / max(n, 1) + math.pi / 2)) for i in range(n)]


def draw_graph(g: Graph, path: str, labels: dict[int, str] | None = None, title: str = "") -> None:
    pos = circle_layout(g.n)
    fig, ax = plt.subplots(figsize=(5, 5))
    for u, v in g.edges():
        ax.plot([pos[u][0], pos[v][0]], [pos[u][1], pos[v][1]], color="0.4", lw=1, zorder=1)
    xs, ys = zip(*pos) if pos else ((), ())
    ax.scatter(xs, ys, s=220, color="white", edgecolors="black", zorder=2)
    for v, (x, y) in enumerate(pos):
        ax.text(x, y, labels.get(v, str(v)) if labels else str(v), ha="center", va="center", fontsize=7, zorder=3)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def scan_figure(report, path: str) -> None:
    """Per-order scanned and hypothesis-hit counts for each theorem of a scan report."""
    verdicts = list(report.verdicts.values())
    fig, axes = plt.subplots(1, len(verdicts), figsize=(4 * len(verdicts), 3.5), squeeze=False)
    for ax, v in zip(axes[0], verdicts):
        orders = sorted(v.by_order)
        scanned = [v.by_order[n]["scanned"] for n in orders]
        hits = [v.by_order[n]["hypothesis_hits"] for n in orders]
        xs = range(len(orders))
        ax.bar([x - 0.2 for x in xs], scanned, width=0.4, label="scanned")
        ax.bar([x + 0.2 for x in xs], hits, width=0.4, label="hypothesis hits")
        ax.set_xticks(list(xs), [str(n) for n in orders])
        ax.set_xlabel("n")
        if any(scanned):
            ax.set_yscale("log")
        bad = len(v.counterexamples)
        ax.set_title(f"{v.theorem}: {bad} counterexample{'s' if bad != 1 else ''}")
        ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
