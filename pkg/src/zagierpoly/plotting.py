"""Figures for the 2-adic valuation of the denominators alpha_n."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def plot_valuations(
    ns: Sequence[int],
    observed: Sequence[int],
    predicted: Sequence[int] | None,
    path: str | Path,
    title: str,
    ylabel: str,
) -> Path:
    """Scatter of observed valuations with an optional closed-form overlay, saved to path."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ns, observed, "o", markersize=3, color="tab:blue", label="computed")
    if predicted is not None:
        ax.step(ns, predicted, where="mid", color="tab:orange", linewidth=1, alpha=0.8, label="closed form")
    ax.set_xlabel("n")
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.yaxis.get_major_locator().set_params(integer=True)
    ax.legend(loc="upper left", frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
