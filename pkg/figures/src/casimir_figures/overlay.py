"""Simulation-versus-models overlay.

Puts the simulated intracavity photon number (series.csv), the damped-model
curve, and the constant stationary-scattering level (both from analytic.csv)
on one pair of axes. All three come straight from the files; nothing is
recomputed or fitted here.
"""

from .errors import SchemaError
from .style import new_figure, save_both
from .tables import read_table


def plot_model_overlay(series_csv: str, analytic_csv: str, out_base: str,
                       log_scale: bool = False) -> dict:
    """Render the overlay to PNG+SVG and return metadata about the ranges."""
    series = read_table(series_csv)
    series.require_columns(["t", "n_intra"])
    series.require_rows()
    analytic = read_table(analytic_csv)
    analytic.require_columns(["t", "n_scattering", "n_damped"])
    analytic.require_rows()

    t_sim = series.floats("t")
    n_sim = series.floats("n_intra")
    t_model = analytic.floats("t")
    n_model = analytic.floats("n_damped")
    level_column = analytic.floats("n_scattering")
    level = level_column[0]

    # The comparison only makes sense where the two time grids cover the
    # same epoch; disjoint ranges mean the files came from different runs.
    lo = max(min(t_sim), min(t_model))
    hi = min(max(t_sim), max(t_model))
    if not (hi > lo):
        raise SchemaError(
            f"time ranges do not overlap: {series_csv} spans "
            f"[{min(t_sim):.6g}, {max(t_sim):.6g}] s but {analytic_csv} spans "
            f"[{min(t_model):.6g}, {max(t_model):.6g}] s"
        )

    fig, ax = new_figure()
    ax.plot(t_sim, n_sim, label="simulated n(t)", linewidth=1.2)
    ax.plot(t_model, n_model, label="damped squeezing model", linestyle="--")
    ax.axhline(level, label="stationary scattering level", linestyle=":",
               color="tab:red")
    if log_scale:
        ax.set_yscale("log")
    ax.set_xlabel("t  (s)")
    ax.set_ylabel("intracavity photon number  (dimensionless)")
    ax.legend()
    outputs = save_both(fig, out_base)
    return {
        "figure": "model_overlay",
        "outputs": outputs,
        "scattering_level": level,
        "overlap_t_range_s": [lo, hi],
        "log_scale": bool(log_scale),
        "series_points": len(t_sim),
        "analytic_points": len(t_model),
    }
