"""Verdict map over a parameter sweep.

Scatters the sweep grid (drive strength vs finesse) colored by the engine's
verdict for each point, straight from sweep.csv. No threshold line is drawn:
that would require computing physics here, and the verdicts themselves
already trace the boundary.
"""

from .errors import SchemaError
from .style import new_figure, save_both
from .tables import read_table

_MARKERS = {
    "stationary": ("tab:blue", "o"),
    "growing": ("tab:orange", "^"),
    "inconclusive": ("tab:gray", "s"),
    "error": ("tab:red", "x"),
}


def plot_threshold_map(sweep_csv: str, out_base: str) -> dict:
    """Render the verdict scatter to PNG+SVG; returns per-verdict counts."""
    table = read_table(sweep_csv)
    table.require_columns(["beta", "finesse", "verdict", "error"])
    table.require_rows()
    beta = table.floats("beta")
    finesse = table.floats("finesse")
    verdicts = table.column("verdict")
    errors = table.column("error")

    groups = {}
    for x, y, verdict, error in zip(beta, finesse, verdicts, errors):
        kind = "error" if error != "" else str(verdict)
        if kind not in _MARKERS:
            raise SchemaError(f"{sweep_csv}: unknown verdict {verdict!r}")
        groups.setdefault(kind, []).append((x, y))

    fig, ax = new_figure()
    for kind in _MARKERS:
        points = groups.get(kind)
        if not points:
            continue
        color, marker = _MARKERS[kind]
        ax.scatter([p[0] for p in points], [p[1] for p in points],
                   color=color, marker=marker, label=kind)
    if all(x > 0.0 for x in beta):
        ax.set_xscale("log")
    if all(y > 0.0 for y in finesse):
        ax.set_yscale("log")
    ax.set_xlabel("drive strength beta  (dimensionless)")
    ax.set_ylabel("finesse F  (dimensionless)")
    ax.legend()
    outputs = save_both(fig, out_base)
    return {
        "figure": "threshold_map",
        "outputs": outputs,
        "counts": {kind: len(points) for kind, points in sorted(groups.items())},
    }
