"""Deterministic matplotlib setup and two-format saving.

The Agg backend is forced before pyplot loads so rendering never depends on
a display; the SVG hash salt and the suppressed date metadata make repeated
renders of the same inputs byte-identical.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

_RC = {
    "figure.figsize": (6.4, 4.2),
    "figure.dpi": 120,
    "savefig.dpi": 120,
    "font.size": 10,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "svg.hashsalt": "casimir-opo-figures",
}


def new_figure():
    """One figure + axes with the package style applied."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
    return fig, ax


def save_both(fig, out_base: str) -> dict:
    """Write <out_base>.png and <out_base>.svg without timestamps."""
    base, ext = _split(out_base)
    png, svg = base + ".png", base + ".svg"
    with plt.rc_context(_RC):
        fig.savefig(png, metadata={"Software": None})
        fig.savefig(svg, metadata={"Date": None})
    plt.close(fig)
    return {"png": png, "svg": svg}


def _split(out_base: str) -> tuple[str, str]:
    for ext in (".png", ".svg"):
        if out_base.endswith(ext):
            return out_base[: -len(ext)], ext
    return out_base, ""
