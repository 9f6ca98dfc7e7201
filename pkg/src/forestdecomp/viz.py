"""Render a forest decomposition to an image file with matplotlib.

Vertices sit on a circle in id order; edges are drawn as arcs colored by
forest index using the same palette as the DOT export, with parallel edges
fanned apart by curvature.  Intended as a quick visual check next to the
text outputs, not as a layout engine.
"""

from __future__ import annotations

import math
from collections import defaultdict

from matplotlib.figure import Figure
from matplotlib.lines import Line2D
from matplotlib.patches import FancyArrowPatch

from .decompose import Decomposition
from .graph import Graph
from .io import PALETTE

__all__ = ["render_decomposition"]


def _positions(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(2 * math.pi * v / n - math.pi / 2),
         math.sin(2 * math.pi * v / n - math.pi / 2))
        for v in range(n)
    ]


def render_decomposition(
    g: Graph,
    d: Decomposition,
    path: str,
    *,
    dpi: int = 150,
) -> None:
    """Draw ``g`` colored by ``d`` and save the figure to ``path``.

    The output format follows the file extension (png, pdf, svg, ...).
    ``d`` is expected to be a valid decomposition of ``g``.
    """
    pos = _positions(g.n)
    fig = Figure(figsize=(7.0, 7.0))
    ax = fig.add_subplot(111)
    ax.set_aspect("equal")
    ax.axis("off")

    # Fan parallel edges apart: the k-th copy of a pair gets its own arc.
    copy_index: dict[tuple[int, int], int] = defaultdict(int)
    for eid in range(g.m):
        u, v = g.edges[eid]
        pair = (min(u, v), max(u, v))
        k = copy_index[pair]
        copy_index[pair] += 1
        rad = 0.0 if k == 0 else 0.18 * ((k + 1) // 2) * (-1 if k % 2 == 0 else 1)
        f = d.assignment[eid]
        color = PALETTE[(f - 1) % len(PALETTE)]
        arc = FancyArrowPatch(
            pos[u],
            pos[v],
            connectionstyle=f"arc3,rad={rad}",
            arrowstyle="-",
            color=color,
            linewidth=1.6,
            zorder=1,
        )
        ax.add_patch(arc)

    xs = [p[0] for p in pos]
    ys = [p[1] for p in pos]
    ax.scatter(xs, ys, s=120, color="white", edgecolors="black", zorder=2)
    if g.n <= 100:
        for v, (x, y) in enumerate(pos):
            ax.text(x, y, str(v), ha="center", va="center", fontsize=7, zorder=3)

    used = sorted(set(d.assignment.values()))
    handles = [
        Line2D([], [], color=PALETTE[(f - 1) % len(PALETTE)], label=f"F{f}")
        for f in used
    ]
    if handles:
        ax.legend(handles=handles, loc="upper right", fontsize=8)

    margin = 1.25
    ax.set_xlim(-margin, margin)
    ax.set_ylim(-margin, margin)
    fig.savefig(path, dpi=dpi, bbox_inches="tight")
