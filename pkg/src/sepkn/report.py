"""Figure rendering for the report-producing subcommands.

Scan and count reports are CSV first; these helpers draw the matching
figures next to them.  Rendering is headless (Agg) and deterministic.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .search import ScanRow


def render_scan_figure(rows: Sequence[ScanRow], path: str) -> None:
    """Exact separation values against the mid-range prediction, per b."""
    fig, (ax, axe) = plt.subplots(
        2, 1, figsize=(6.4, 6.0), sharex=True, height_ratios=[3, 1]
    )
    for b in sorted({r.b for r in rows}):
        pts = sorted((r.a, r.sep, r.conjectured, r.epsilon) for r in rows if r.b == b)
        avals = [p[0] for p in pts]
        ax.plot(avals, [p[1] for p in pts], "o-", label=f"exact, b={b}")
        ax.plot(avals, [p[2] for p in pts], "s--", alpha=0.6, label=f"predicted, b={b}")
        axe.plot(avals, [p[3] for p in pts], "o-", label=f"b={b}")
    n = rows[0].n if rows else 0
    ax.set_ylabel("separation number")
    ax.set_title(f"separation numbers of the complete graph on {n} vertices")
    ax.legend(fontsize=8)
    axe.axhspan(-1, 0, color="0.9")
    axe.set_xlabel("list size a")
    axe.set_ylabel("exact - predicted")
    axe.set_yticks(sorted({r.epsilon for r in rows} | {-1, 0}))
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def render_count_figure(n: int, values: Sequence[int], path: str) -> None:
    """Growth of the class count with the list size."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    avals = list(range(len(values)))
    ax.semilogy(avals, values, "o-")
    ax.set_xlabel("list size a")
    ax.set_ylabel("assignment classes")
    ax.set_title(f"assignment classes on {n} vertices")
    ax.grid(True, which="both", alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
