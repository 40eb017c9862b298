"""Matplotlib renderings (PNG/PDF) of the figure data sets and census tables.

Only the CLI report path and ``figure --out *.png`` come through here; the
byte-stable SVG lives in ``render``.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from hypkac.mult.census import Census  # noqa: E402
from hypkac.render import PALETTE  # noqa: E402
from hypkac.series import FIGURE_LABELS, FigureData  # noqa: E402

RC = {
    "font.family": "serif",
    "font.size": 9,
    "axes.labelsize": 9,
    "legend.fontsize": 7,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "svg.hashsalt": "hypkac",
}

# marker sizes are in points^2
_SIZES = {label: (r * 1.6) ** 2 for label, (_, r) in PALETTE.items()}


def _metadata(path: Path) -> dict | None:
    # drop timestamps so repeated runs write identical files
    ext = path.suffix.lower()
    if ext == ".pdf":
        return {"CreationDate": None, "ModDate": None, "Producer": None, "Creator": None}
    if ext == ".png":
        return {"Software": None}
    return None


def plot_figure(data: FigureData, path: str | Path) -> Path:
    path = Path(path)
    cfg = data.cfg
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(4.5, 4.0))
        for label in FIGURE_LABELS:
            pts = data.points[label]
            if not pts:
                continue
            color, _ = PALETTE[label]
            ax.scatter([v.s for v in pts], [v.t for v in pts], s=_SIZES[label], c=color, label=label, zorder=2)
        ax.set_xlabel("s")
        ax.set_ylabel("t")
        ax.set_aspect("equal")
        pts = [v for _, v in data.rows()]
        ax.set_xlim(-0.5, max(v.s for v in pts) + 0.5)
        ax.set_ylim(-0.5, max(v.t for v in pts) + 0.5)
        ax.grid(True, linewidth=0.3, alpha=0.5, zorder=0)
        ax.set_title(f"a={cfg.a}, i={cfg.i}, j={cfg.j}")
        ax.legend(loc="upper left", bbox_to_anchor=(1.02, 1.0), frameon=False)
        fig.tight_layout()
        fig.savefig(path, dpi=150, metadata=_metadata(path))
        plt.close(fig)
    return path


def plot_census(low: Census, high: Census, path: str | Path) -> Path:
    """``log10`` of the eigenspace dimension and of the new-module count per eigenvalue."""
    path = Path(path)
    cfg = low.cfg
    with plt.rc_context(RC):
        fig, ax = plt.subplots(figsize=(5.0, 3.2))
        for c, marker in ((low, "o"), (high, "s")):
            lam = [float(r.lambda_H) for r in c.rows]
            ax.plot(lam, [math.log10(r.d_H) for r in c.rows], marker=marker, ms=3, lw=0.8, label=f"d_H ({c.side})")
            pos = [(x, r.new.hi) for x, r in zip(lam, c.rows) if r.new.hi > 0]
            ax.plot(
                [x for x, _ in pos],
                [math.log10(n) for _, n in pos],
                marker=marker,
                ms=3,
                lw=0.8,
                ls="--",
                label=f"new ({c.side}, upper)",
            )
        ax.set_xlabel("eigenvalue of H")
        ax.set_ylabel("log10 count")
        ax.set_title(f"a={cfg.a}, i={cfg.i}, j={cfg.j}")
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path, dpi=150, metadata=_metadata(path))
        plt.close(fig)
    return path
