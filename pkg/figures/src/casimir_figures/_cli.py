"""Console entry points: one script per figure.

Each script takes input and output paths, renders PNG+SVG, and prints one
JSON metadata object to stdout. Failures print an error JSON object to
stderr (``{"error": {"category": ..., "message": ...}}``) and exit 1,
matching the simulator CLI's contract.
"""

import argparse
import json
import sys

from .errors import FigureError
from .fig2 import plot_fig2
from .overlay import plot_model_overlay
from .spectrum import plot_spectrum
from .threshold_map import plot_threshold_map


def _emit(metadata: dict) -> int:
    sys.stdout.write(json.dumps(metadata, indent=2, sort_keys=True) + "\n")
    return 0


def _fail(exc: FigureError) -> int:
    payload = {"error": {"category": exc.category, "message": str(exc)}}
    sys.stderr.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return 1


def main_fig2(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot-fig2",
        description="Damped-model photon number against gamma*t with the "
                    "peak annotated; repeat --analytic/--derive to overlay "
                    "several configurations.",
    )
    parser.add_argument("--analytic", action="append", required=True,
                        metavar="ANALYTIC_CSV", help="analytic.csv from the simulator CLI")
    parser.add_argument("--derive", action="append", required=True,
                        metavar="DERIVE_JSON", help="derive.json that supplies gamma_per_s")
    parser.add_argument("--label", action="append", default=None,
                        help="curve label (one per --analytic; default: file stem)")
    parser.add_argument("--out", required=True, help="output image path (PNG+SVG are written)")
    args = parser.parse_args(argv)
    try:
        if len(args.analytic) != len(args.derive):
            raise FigureError(
                f"got {len(args.analytic)} --analytic but {len(args.derive)} --derive"
            )
        metadata = plot_fig2(list(zip(args.analytic, args.derive)), args.out,
                             labels=args.label)
    except FigureError as exc:
        return _fail(exc)
    return _emit(metadata)


def main_overlay(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot-model-overlay",
        description="Simulated n(t), the damped-model curve, and the "
                    "stationary scattering level on shared axes.",
    )
    parser.add_argument("--series", required=True, help="series.csv from the simulator CLI")
    parser.add_argument("--analytic", required=True, help="analytic.csv from the simulator CLI")
    parser.add_argument("--log", action="store_true", help="log-scale y axis")
    parser.add_argument("--out", required=True, help="output image path (PNG+SVG are written)")
    args = parser.parse_args(argv)
    try:
        metadata = plot_model_overlay(args.series, args.analytic, args.out,
                                      log_scale=args.log)
    except FigureError as exc:
        return _fail(exc)
    return _emit(metadata)


def main_spectrum(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot-spectrum",
        description="Per-mode occupation bars with the pair-production "
                    "mirror axis marked and the symmetry residual reported.",
    )
    parser.add_argument("--spectrum", required=True, help="spectrum.csv from the simulator CLI")
    parser.add_argument("--out", required=True, help="output image path (PNG+SVG are written)")
    args = parser.parse_args(argv)
    try:
        metadata = plot_spectrum(args.spectrum, args.out)
    except FigureError as exc:
        return _fail(exc)
    return _emit(metadata)


def main_threshold_map(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plot-threshold-map",
        description="Engine verdicts scattered over the sweep grid.",
    )
    parser.add_argument("--sweep", required=True, help="sweep.csv from the simulator CLI")
    parser.add_argument("--out", required=True, help="output image path (PNG+SVG are written)")
    args = parser.parse_args(argv)
    try:
        metadata = plot_threshold_map(args.sweep, args.out)
    except FigureError as exc:
        return _fail(exc)
    return _emit(metadata)
