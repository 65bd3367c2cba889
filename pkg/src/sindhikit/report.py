"""Repertoire report: delimited export plus an optional figure.

The figure charts the Arabic block of the Unicode plane (U+0600-U+06FF as
a 16x16 grid) and marks where the Sindhi repertoire sits scattered inside
it, colored by joining class. Rendering uses the Agg backend and writes
straight to a file; nothing opens a window.
"""

from __future__ import annotations

from . import charset
from .charset import JoiningClass

BLOCK_START = 0x0600
BLOCK_END = 0x0700

_CLASS_STYLE = {
    JoiningClass.DUAL: ("tab:blue", "dual-joining"),
    JoiningClass.RIGHT_JOINING: ("tab:orange", "right-joining"),
    JoiningClass.NON_JOINING: ("tab:red", "non-joining"),
    JoiningClass.TRANSPARENT: ("tab:green", "transparent (marks)"),
}


def _grid(cp: int) -> tuple[int, int]:
    offset = cp - BLOCK_START
    return offset % 16, offset // 16


def render_plane_figure(path: str) -> None:
    """Write the repertoire-in-the-Arabic-block chart to path (format by
    extension)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(9, 9))

    xs, ys = zip(*(_grid(cp) for cp in range(BLOCK_START, BLOCK_END)))
    ax.scatter(xs, ys, s=8, color="0.8", zorder=1, label=None)

    for joining, (color, label) in _CLASS_STYLE.items():
        points = [
            _grid(info.code_point)
            for info in charset.repertoire()
            if info.joining is joining
        ]
        if not points:
            continue
        xs, ys = zip(*points)
        ax.scatter(
            xs,
            ys,
            s=160,
            facecolors="none",
            edgecolors=color,
            linewidths=2,
            zorder=2,
            label="%s (%d)" % (label, len(xs)),
        )

    for info in charset.repertoire():
        x, y = _grid(info.code_point)
        ax.annotate(
            "%04X" % info.code_point,
            (x, y),
            textcoords="offset points",
            xytext=(0, 8),
            fontsize=5,
            ha="center",
        )

    ax.set_xticks(range(16), ["%X" % i for i in range(16)])
    ax.set_yticks(range(16), ["U+06%X0" % i for i in range(16)])
    ax.invert_yaxis()
    ax.set_xlim(-0.7, 15.7)
    ax.set_title(
        "Sindhi repertoire scattered across the Unicode Arabic block"
    )
    ax.legend(loc="upper left", bbox_to_anchor=(1.01, 1.0), fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_tsv(path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(charset.repertoire_tsv())
