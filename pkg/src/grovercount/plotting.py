"""Figure rendering for CLI reports.

Figures are drawn on standalone ``Figure`` objects with the Agg canvas so
nothing touches pyplot's global state. They are written next to the CSV or
JSON output, which remains the machine-readable record.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

TARGET_COLOR = "#1f5fa8"
OTHERS_COLOR = "#c0504d"


def _new_figure(width=6.4, height=4.0):
    fig = Figure(figsize=(width, height), dpi=100)
    FigureCanvasAgg(fig)
    return fig, fig.add_subplot(1, 1, 1)


def _save(fig: Figure, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    # fixed metadata keeps PNG bytes stable between runs
    fig.savefig(path, metadata={"Software": None} if path.suffix == ".png" else None)
    return path


def plot_sweep(rows: Sequence[dict], path, title: str = "", delta: float | None = None) -> Path:
    """Success probability against iteration count, analytic line with simulated markers."""
    ks = [r["k"] for r in rows]
    fig, ax = _new_figure()
    ax.plot(ks, [r["analytic_success"] for r in rows], color=TARGET_COLOR, lw=1.2,
            label="analytic")
    ax.plot(ks, [r["simulated_success"] for r in rows], "o", ms=4, mfc="none",
            color="k", label="simulated")
    if delta is not None:
        ax.axhline(delta, color=OTHERS_COLOR, ls="--", lw=0.8, label=f"threshold {delta:g}")
    ax.set_xlabel("iterations k")
    ax.set_ylabel("success probability")
    ax.set_ylim(-0.02, 1.02)
    ax.set_title(title)
    ax.legend(loc="best", frameon=False, fontsize="small")
    return _save(fig, path)


def plot_target_split(labels: Sequence[str], target: Sequence[float], path,
                      title: str = "") -> Path:
    """Grouped bars of combined target vs. non-target probability per run."""
    others = [1.0 - t for t in target]
    x = range(len(labels))
    width = 0.38
    fig, ax = _new_figure()
    ax.bar([i - width / 2 for i in x], target, width, color=TARGET_COLOR, label="Target")
    ax.bar([i + width / 2 for i in x], others, width, color=OTHERS_COLOR, label="Others")
    for i, t in zip(x, target):
        ax.text(i - width / 2, t + 0.01, f"{t:.3f}", ha="center", va="bottom", fontsize=8)
    ax.set_xticks(list(x))
    ax.set_xticklabels(labels)
    ax.set_ylabel("probability")
    ax.set_ylim(0, 1.1)
    ax.set_title(title)
    ax.legend(frameon=False, fontsize="small")
    return _save(fig, path)


def plot_compare(rows: Sequence[dict], path, title: str = "") -> Path:
    ms = [r["m"] for r in rows]
    fig, ax = _new_figure(7.2, 4.0)
    ax.plot(ms, [r["baseline_success"] for r in rows], "s-", ms=3, lw=0.8,
            color=OTHERS_COLOR, label="textbook count")
    ax.plot(ms, [r["opt_success"] for r in rows], "o-", ms=3, lw=0.8,
            color=TARGET_COLOR, label="planned count")
    ax.axhline(rows[0]["delta"], color="0.5", ls="--", lw=0.8)
    ax.set_xlabel("number of targets M")
    ax.set_ylabel("success probability")
    ax.set_ylim(-0.02, 1.02)
    ax.set_title(title)
    ax.legend(frameon=False, fontsize="small")
    return _save(fig, path)
