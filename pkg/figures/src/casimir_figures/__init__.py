"""Figure rendering for casimir-opo output files.

Every script in this package is a pure consumer of the simulator CLI's file
contracts (analytic.csv, series.csv, spectrum.csv, sweep.csv, derive.json):
it plots numbers read from those files and nothing else. No physics is
recomputed here and no physical constants appear in this package; if a
quantity is needed for an axis (for example the damping rate that makes
time dimensionless), it is read from an input file.

Rendering is deterministic: fixed style, fixed SVG hash salt, no embedded
timestamps, so identical inputs give byte-identical PNG and SVG output.
"""

from .errors import FigureError, ParseError, SchemaError
from .figspec import FIGURE_KINDS, FigureSpec, render
from .fig2 import plot_fig2
from .overlay import plot_model_overlay
from .spectrum import plot_spectrum
from .threshold_map import plot_threshold_map

__version__ = "0.1.0"

__all__ = [
    "FIGURE_KINDS",
    "FigureError",
    "FigureSpec",
    "ParseError",
    "SchemaError",
    "plot_fig2",
    "plot_model_overlay",
    "plot_spectrum",
    "plot_threshold_map",
    "render",
    "__version__",
]
