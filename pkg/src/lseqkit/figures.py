"""Matplotlib figure rendering for the report path.

matplotlib is imported lazily with the Agg backend so that figure support
never drags a display dependency into library use; the functions here are
invoked only when a command writes a report file.
"""

from __future__ import annotations

from pathlib import Path

__all__ = ["save_correlation_figure", "save_sweep_figure"]


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    from matplotlib import pyplot

    return pyplot


def save_correlation_figure(
    taus: list[int], values: list[int], path: str | Path, title: str = ""
) -> Path:
    """Render shift-versus-correlation as a stem-style plot."""
    plt = _pyplot()
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.axhline(0.0, color="0.6", linewidth=0.8)
    ax.vlines(taus, 0, values, color="tab:blue", linewidth=1.2)
    ax.plot(taus, values, "o", color="tab:blue", markersize=3)
    ax.set_xlabel("tau")
    ax.set_ylabel("arithmetic cross-correlation")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_sweep_figure(reports, path: str | Path) -> Path:
    """Render counterexample counts against q, colored by verdict."""
    plt = _pyplot()
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 4))
    colors = {"verified": "tab:green", "refuted": "tab:red", "error": "0.4"}
    for status, color in colors.items():
        qs = [r.q for r in reports if r.status == status]
        counts = [len(r.counterexamples) for r in reports if r.status == status]
        if qs:
            ax.scatter(qs, counts, s=14, color=color, label=status)
    ax.set_xlabel("q")
    ax.set_ylabel("cyclic collisions among decimations")
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
