"""Matplotlib Hasse diagrams for the report paths.

Nodes are placed on layers by chain height; modular (or otherwise
highlighted) elements are filled.  Rendering is headless (Agg) and the
output format follows the file extension.
"""

from __future__ import annotations

from typing import Sequence

from .lattice import FiniteLattice


def hasse_figure(lat: FiniteLattice, path: str, highlight: Sequence[int] = (),
                 title: str | None = None) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    heights = lat.heights()
    layers: dict[int, list[int]] = {}
    for node, h in enumerate(heights):
        layers.setdefault(h, []).append(node)
    pos: dict[int, tuple[float, float]] = {}
    for h, nodes in layers.items():
        nodes.sort(key=lambda n: lat.labels[n])
        for k, node in enumerate(nodes):
            pos[node] = ((k + 1) / (len(nodes) + 1), h)

    width = max(6.0, 0.85 * max(len(nodes) for nodes in layers.values()))
    depth = max(3.0, 1.1 * (max(layers) + 1))
    fig, ax = plt.subplots(figsize=(width, depth))
    for child, parent in lat.covers():
        (x1, y1), (x2, y2) = pos[child], pos[parent]
        ax.plot([x1, x2], [y1, y2], color="0.55", linewidth=0.9, zorder=1)
    marked = set(highlight)
    for node, (x, y) in pos.items():
        face = "#9ecae8" if node in marked else "white"
        ax.scatter([x], [y], s=160, facecolor=face, edgecolor="black",
                   linewidth=0.8, zorder=2)
        ax.annotate(lat.labels[node], (x, y), textcoords="offset points",
                    xytext=(0, 9), ha="center", fontsize=8)
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    ax.margins(0.08)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
