"""Figure builders over parsed artifacts. Each returns the Figure it saved."""

from __future__ import annotations

import math

import numpy as np
from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

ALGO_STYLE = {
    "mgas": dict(color="tab:blue", marker="o"),
    "direct": dict(color="tab:orange", marker="s"),
}


def _save(fig: Figure, out_path) -> Figure:
    FigureCanvasAgg(fig)
    fig.savefig(out_path)
    return fig


def _panel_grid(classes):
    """4x2 grid pairing simple/hard classes when the full 8 are present."""
    if sorted(classes) == [1, 2, 3, 4, 5, 6, 7, 8]:
        return 4, 2, [1, 2, 3, 4, 5, 6, 7, 8]
    n = max(len(classes), 1)
    cols = min(2, n)
    rows = math.ceil(n / cols)
    return rows, cols, list(classes)


def render_characteristics(data: dict, out_path, classes=None) -> Figure:
    """One panel per class, one solved-vs-budget curve per algorithm, log-x.

    `data` is a parsed characteristics table; `classes` forces the panel set
    (classes without rows render as annotated empty panels).
    """
    present = sorted(set(int(c) for c in data["class"]))
    panel_classes = sorted(set(classes)) if classes else present
    if not panel_classes:
        panel_classes = [0]  # single annotated empty panel
    rows, cols, ordered = _panel_grid(panel_classes)
    fig = Figure(figsize=(4.2 * cols, 2.9 * rows))
    axes = fig.subplots(rows, cols, squeeze=False)
    budgets = np.asarray(data["budget"])
    solved = np.asarray(data["solved_count"])
    algos = np.asarray(data["algo"])
    cls = np.asarray(data["class"])
    for slot, class_id in enumerate(ordered):
        ax = axes[slot % rows][slot // rows] if (rows, cols) == (4, 2) else (
            axes[slot // cols][slot % cols])
        mask_class = cls == class_id
        if not np.any(mask_class):
            ax.text(0.5, 0.5, "no data", ha="center", va="center",
                    transform=ax.transAxes, color="gray")
            ax.set_title(f"class {class_id}" if class_id else "empty input")
            ax.set_xticks([])
            ax.set_yticks([])
            continue
        for algo in sorted(set(algos[mask_class])):
            m = mask_class & (algos == algo)
            order = np.argsort(budgets[m])
            style = ALGO_STYLE.get(algo, {})
            ax.plot(budgets[m][order], solved[m][order], drawstyle="steps-post",
                    label=algo, markersize=3, **style)
        ax.set_xscale("log")
        ax.set_title(f"class {class_id}")
        ax.set_xlabel("trials")
        ax.set_ylabel("problems solved")
        ax.legend(fontsize=8)
    for slot in range(len(ordered), rows * cols):
        axes[slot // cols][slot % cols].axis("off")
    fig.tight_layout()
    return _save(fig, out_path)


def render_hull_diagram(selection: dict, out_path, diagram: dict | None = None,
                        iteration: int | None = None) -> Figure:
    """Scatter of (h, F) dots with the selected hull chain highlighted.

    Uses the latest recorded iteration unless one is given; the optional
    diagram snapshot supplies the background dot cloud.
    """
    iters = np.asarray(selection["iter"])
    if iters.size == 0:
        raise ValueError("selection file has no rows")
    iteration = int(iters.max()) if iteration is None else int(iteration)
    mask = iters == iteration
    if not np.any(mask):
        raise ValueError(f"no selection rows for iteration {iteration}")
    h = np.asarray(selection["h"])[mask]
    F = np.asarray(selection["F"])[mask]
    passed = np.asarray(selection["passed_xi"])[mask].astype(bool)
    order = np.argsort(h)

    fig = Figure(figsize=(5.2, 3.8))
    ax = fig.subplots()
    if diagram is not None:
        ax.scatter(diagram["h"], diagram["f_mid"], s=12, color="0.75",
                   label="intervals", zorder=1)
    ax.plot(h[order], F[order], color="tab:blue", lw=1.2, zorder=2)
    ax.scatter(h[order][passed[order]], F[order][passed[order]], s=42,
               facecolor="tab:blue", edgecolor="black", zorder=3,
               label="selected (improving)")
    if np.any(~passed):
        ax.scatter(h[order][~passed[order]], F[order][~passed[order]], s=42,
                   facecolor="white", edgecolor="tab:blue", zorder=3,
                   label="hull, below threshold")
    ax.set_xlabel("h")
    ax.set_ylabel("F")
    ax.set_title(f"interval diagram, iteration {iteration}")
    ax.legend(fontsize=8)
    fig.tight_layout()
    return _save(fig, out_path)


def render_trial_scatter(trace: dict, out_path, curve: dict | None = None) -> Figure:
    """Trial points in the first two coordinates, shaded by trial order."""
    if trace["dim"] < 2:
        raise ValueError("trial scatter needs at least two coordinates")
    fig = Figure(figsize=(4.6, 4.2))
    ax = fig.subplots()
    if curve is not None:
        ax.plot(curve["coords"][:, 0], curve["coords"][:, 1], color="0.85",
                lw=0.7, zorder=1, label="curve")
    pts = ax.scatter(trace["y"][:, 0], trace["y"][:, 1], c=trace["trial"], s=9,
                     cmap="viridis", zorder=2)
    fig.colorbar(pts, ax=ax, label="trial")
    ax.set_xlabel("y_1")
    ax.set_ylabel("y_2")
    ax.set_aspect("equal")
    ax.set_title(f"{len(trace['trial'])} trials")
    fig.tight_layout()
    return _save(fig, out_path)


def render_sweep_table(sweep: dict, out_path) -> Figure:
    """Sensitivity table: one row per eta with average/maximum/unsolved."""
    n = len(sweep["eta"])
    fig = Figure(figsize=(4.6, 0.5 + 0.35 * (n + 1)))
    ax = fig.subplots()
    ax.axis("off")
    cells = [
        [f"{sweep['eta'][i]:.0e}", f"{sweep['average'][i]:.2f}",
         str(int(sweep["maximum"][i])), str(int(sweep["unsolved"][i]))]
        for i in range(n)
    ]
    table = ax.table(cellText=cells,
                     colLabels=["eta", "average", "maximum", "unsolved"],
                     loc="center")
    table.auto_set_font_size(False)
    table.set_fontsize(9)
    ax.set_title("eta sensitivity")
    fig.tight_layout()
    return _save(fig, out_path)
