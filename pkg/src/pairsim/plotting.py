"""Timing figures for benchmark reports.

Renders mean wall time against qubit count on a log scale, one series per
(workload, gate), to a PNG next to the delimited report.  Import stays
lazy on the CLI side; headless backends only.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def figure_path_for(report_path: str) -> str:
    base, _ = os.path.splitext(report_path)
    return base + ".png"


def render_report_figure(rows, path: str) -> str:
    """Plot report rows and write a PNG; returns the figure path."""
    if not rows:
        raise ValueError("cannot plot an empty report")
    series: dict[str, list] = {}
    for row in rows:
        label = row.workload if not row.gate else f"{row.workload}:{row.gate}"
        series.setdefault(label, []).append(row)

    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for label, group in series.items():
        group = sorted(group, key=lambda r: r.qubits)
        ns = [r.qubits for r in group]
        means = [r.mean_ns / 1e6 for r in group]
        stds = [r.std_ns / 1e6 for r in group]
        ax.errorbar(ns, means, yerr=stds, marker="o", markersize=3, capsize=2, label=label)
    ax.set_yscale("log")
    ax.set_xlabel("qubits")
    ax.set_ylabel("mean time per iteration (ms)")
    precision = rows[0].precision
    ax.set_title(f"{rows[0].iterations} iterations, {precision} precision")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
