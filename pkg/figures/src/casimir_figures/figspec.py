"""Declarative figure requests.

A FigureSpec names which figure to draw, the input artifact paths, and the
output image path; ``render`` dispatches to the matching plot function.
"""

import os
from dataclasses import dataclass

from .errors import ParseError, SchemaError
from .fig2 import plot_fig2
from .overlay import plot_model_overlay
from .spectrum import plot_spectrum
from .threshold_map import plot_threshold_map

FIGURE_KINDS = ("fig2_crossover", "model_overlay", "spectrum_bars", "threshold_map")

# which -> (expected input count, human-readable input description)
_INPUTS = {
    "fig2_crossover": (None, "analytic.csv, derive.json [, analytic.csv, derive.json ...]"),
    "model_overlay": (2, "series.csv, analytic.csv"),
    "spectrum_bars": (1, "spectrum.csv"),
    "threshold_map": (1, "sweep.csv"),
}


@dataclass(frozen=True)
class FigureSpec:
    """One figure request: inputs, output image path, figure kind."""

    which: str
    inputs: tuple[str, ...]
    output: str

    def validate(self) -> None:
        if self.which not in FIGURE_KINDS:
            raise SchemaError(
                f"unknown figure kind {self.which!r}; expected one of {', '.join(FIGURE_KINDS)}"
            )
        expected, description = _INPUTS[self.which]
        if expected is None:
            ok = len(self.inputs) >= 2 and len(self.inputs) % 2 == 0
        else:
            ok = len(self.inputs) == expected
        if not ok:
            raise SchemaError(
                f"{self.which} takes inputs ({description}); got {len(self.inputs)} path(s)"
            )
        for path in self.inputs:
            if not os.path.exists(path):
                raise ParseError(f"input file does not exist: {path}")
        if not self.output:
            raise SchemaError("output path must be non-empty")


def render(spec: FigureSpec, **options) -> dict:
    """Validate the request and draw the corresponding figure; returns metadata."""
    spec.validate()
    if spec.which == "fig2_crossover":
        pairs = list(zip(spec.inputs[0::2], spec.inputs[1::2]))
        return plot_fig2(pairs, spec.output, **options)
    if spec.which == "model_overlay":
        return plot_model_overlay(spec.inputs[0], spec.inputs[1], spec.output, **options)
    if spec.which == "spectrum_bars":
        return plot_spectrum(spec.inputs[0], spec.output, **options)
    return plot_threshold_map(spec.inputs[0], spec.output, **options)
