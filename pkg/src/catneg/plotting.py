"""Render a sweep result to a figure file next to its CSV."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .sweeps import (
    MODE_COMPARE,
    MODE_N_SWEEP,
    MODE_PARTITION_SWEEP,
    MODE_TIME_SWEEP,
    SweepResult,
)

_X_LABEL = {
    MODE_TIME_SWEEP: "t",
    MODE_COMPARE: "t",
    MODE_N_SWEEP: "number of qubits N",
    MODE_PARTITION_SWEEP: "partition size k",
}

# (column, label, plot style) in draw order; missing columns are skipped.
_SERIES = (
    ("negativity_numeric", "numeric", dict(linestyle="-", marker="", color="C0")),
    ("negativity_delta", "numeric (delta)", dict(linestyle="-", marker="o", color="C0")),
    (
        "negativity_gaussian",
        "numeric (gaussian)",
        dict(linestyle="-", marker="s", color="C1"),
    ),
    (
        "negativity_short_time",
        "short-time closed form",
        dict(linestyle="", marker="x", color="C2"),
    ),
    (
        "negativity_leading",
        "leading eigenvalue only",
        dict(linestyle=":", marker="", color="C3"),
    ),
    (
        "negativity_small_angle",
        "small-angle law",
        dict(linestyle="--", marker="", color="C4"),
    ),
)


def _column(result: SweepResult, name: str):
    if name not in result.columns:
        return None
    i = result.columns.index(name)
    xs, ys = [], []
    for j, row in enumerate(result.rows):
        if row[i] is None:
            continue
        xs.append(j)
        ys.append(row[i])
    return xs, ys


def render_sweep(result: SweepResult, path: str) -> None:
    """Write a PNG (or any matplotlib-supported format) for the sweep."""
    coords = [row[0] for row in result.rows]
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    for name, label, style in _SERIES:
        series = _column(result, name)
        if series is None or not series[0]:
            continue
        xs = [coords[j] for j in series[0]]
        ax.plot(xs, series[1], label=label, **style)
    ax.set_xlabel(_X_LABEL.get(result.mode, result.columns[0]))
    ax.set_ylabel("negativity")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best", fontsize="small")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
