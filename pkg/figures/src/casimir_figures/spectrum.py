"""Final per-mode occupation bars.

Draws n_k against the mode index k from spectrum.csv and marks the mirror
axis of the pair-production symmetry. The axis sits at the occupation
maximum (the resonantly driven mode); it is located from the data, not from
any model. For an all-zero (vacuum) spectrum no axis is drawn.
"""

from .errors import SchemaError
from .style import new_figure, save_both
from .tables import read_table


def _mode_indices(table) -> list[int]:
    indices = []
    for value in table.floats("mode_index"):
        if value != int(value) or value < 1:
            raise SchemaError(
                f"{table.path}: mode_index must be a positive integer, got {value!r}"
            )
        indices.append(int(value))
    return indices


def _symmetry_residual(modes: dict[int, float], center: int) -> float:
    """Worst relative mismatch between mirror partners k and 2*center - k."""
    scale = max(modes.values())
    worst = 0.0
    for k, n_k in modes.items():
        partner = 2 * center - k
        mismatch = abs(n_k - modes.get(partner, 0.0))
        worst = max(worst, mismatch / scale)
    return worst


def plot_spectrum(spectrum_csv: str, out_base: str) -> dict:
    """Render occupation bars to PNG+SVG; returns the symmetry diagnostics."""
    table = read_table(spectrum_csv)
    table.require_columns(["mode_index", "n_k"])
    table.require_rows()
    indices = _mode_indices(table)
    occupations = table.floats("n_k")
    modes = dict(zip(indices, occupations))
    if len(modes) != len(indices):
        raise SchemaError(f"{spectrum_csv}: duplicate mode_index values")

    fig, ax = new_figure()
    ax.bar(indices, occupations, width=0.8)
    ax.set_xlabel("mode index k  (frequency k * pi * c / L0)")
    ax.set_ylabel("photon number n_k  (dimensionless)")
    ax.set_xticks(indices if len(indices) <= 24 else indices[:: len(indices) // 12])

    if any(n > 0.0 for n in occupations):
        center = max(modes, key=modes.get)
        residual = _symmetry_residual(modes, center)
        ax.axvline(center, linestyle=":", color="tab:red",
                   label=f"mirror axis k = {center}")
        ax.legend()
    else:
        center = None
        residual = None

    outputs = save_both(fig, out_base)
    return {
        "figure": "spectrum_bars",
        "outputs": outputs,
        "modes": len(indices),
        "symmetry_center_k": center,
        "symmetry_residual": residual,
    }
