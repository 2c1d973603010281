"""Matplotlib rendering of bigraded homology tables."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .homology import BigradedGroup


def plot_bigraded(group: BigradedGroup, path: str, title: str = "") -> str:
    """Render a (t, q) grid of the bigraded group to an image file."""
    fig, ax = plt.subplots(figsize=(6, 6))
    items = group.items()
    if items:
        ts = [t for (t, _), _ in items]
        qs = [q for (_, q), _ in items]
        tmin, tmax = min(ts) - 1, max(ts) + 1
        qmin, qmax = min(qs) - 1, max(qs) + 1
    else:
        tmin, tmax, qmin, qmax = -1, 1, -1, 1
    for (t, q), (rank, torsion) in items:
        parts = []
        if rank == 1:
            parts.append("Z")
        elif rank > 1:
            parts.append(f"Z^{rank}")
        parts += [f"Z/{d}" for d in torsion]
        ax.text(t, q, "+".join(parts), ha="center", va="center", fontsize=11,
                bbox={"boxstyle": "round", "facecolor": "lightsteelblue"})
    ax.set_xticks(range(tmin, tmax + 1))
    ax.set_yticks(range(qmin, qmax + 1))
    ax.set_xlim(tmin - 0.5, tmax + 0.5)
    ax.set_ylim(qmin - 0.5, qmax + 0.5)
    ax.set_xlabel("homological degree t")
    ax.set_ylabel("quantum degree q")
    ax.grid(True, linestyle=":", alpha=0.5)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
