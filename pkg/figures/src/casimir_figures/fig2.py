"""Rise-and-decay crossover figure.

Plots the damped-model photon number against dimensionless time gamma*t and
annotates the curve's maximum. The time column in analytic.csv is in
seconds; the damping rate gamma that makes it dimensionless is read from
the matching derive.json (key ``gamma_per_s``) — it is never computed here.
"""

import os

from .errors import SchemaError
from .style import new_figure, save_both
from .tables import positive_number, read_json, read_table


def _curve(analytic_csv: str, derive_json: str) -> tuple[list[float], list[float], float]:
    table = read_table(analytic_csv)
    table.require_columns(["t", "n_damped"])
    table.require_rows()
    gamma = positive_number(read_json(derive_json), derive_json, "gamma_per_s")
    t = table.floats("t")
    n = table.floats("n_damped")
    return [gamma * x for x in t], n, gamma


def _grid_step(gamma_t: list[float]) -> float:
    if len(gamma_t) < 2:
        return 0.0
    steps = sorted(b - a for a, b in zip(gamma_t, gamma_t[1:]))
    return steps[len(steps) // 2]


def plot_fig2(pairs, out_base: str, labels=None) -> dict:
    """Render one or more (analytic.csv, derive.json) pairs to PNG+SVG.

    Returns metadata with, per curve, the annotated peak abscissa in
    gamma*t units and the local grid step (for "within one grid step"
    checks downstream).
    """
    pairs = list(pairs)
    if not pairs:
        raise SchemaError("plot_fig2 needs at least one (analytic.csv, derive.json) pair")
    if labels is None:
        labels = [os.path.splitext(os.path.basename(csv_path))[0] for csv_path, _ in pairs]
    if len(labels) != len(pairs):
        raise SchemaError(f"got {len(labels)} labels for {len(pairs)} input pairs")

    fig, ax = new_figure()
    curves = []
    for (analytic_csv, derive_json), label in zip(pairs, labels):
        gamma_t, n, gamma = _curve(analytic_csv, derive_json)
        (line,) = ax.plot(gamma_t, n, label=label)
        peak_index = max(range(len(n)), key=n.__getitem__)
        peak_x, peak_y = gamma_t[peak_index], n[peak_index]
        ax.plot([peak_x], [peak_y], marker="o", color=line.get_color())
        ax.annotate(
            f"peak at gamma*t = {peak_x:.3g}",
            xy=(peak_x, peak_y),
            xytext=(12, 10),
            textcoords="offset points",
            color=line.get_color(),
        )
        curves.append(
            {
                "label": label,
                "annotated_peak_gamma_t": peak_x,
                "annotated_peak_n": peak_y,
                "grid_step_gamma_t": _grid_step(gamma_t),
                "gamma_per_s": gamma,
            }
        )

    ax.set_xlabel("gamma * t  (time in units of the damping time, dimensionless)")
    ax.set_ylabel("intracavity photon number n_damped  (dimensionless)")
    if len(curves) > 1:
        ax.legend()
    outputs = save_both(fig, out_base)
    return {"figure": "fig2_crossover", "outputs": outputs, "curves": curves}
