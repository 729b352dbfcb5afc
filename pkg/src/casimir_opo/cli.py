"""Command-line interface.

Subcommands: derive, analytic, simulate, sweep, compare. Every subcommand
reads a JSON config (--config), writes its artifacts under --out-dir, and is
fully deterministic: the same config yields byte-identical outputs. Errors
exit nonzero with a machine-readable JSON diagnostic on stderr:
{"error": {"category": ..., "message": ...}}.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from . import analytic as models
from . import engine, io
from .config import ExperimentConfig, load_config
from .errors import CasimirOpoError, InvalidConfigError
from .modes import ModeBasis
from .params import DerivedParams, derive, pump_amplitude

TWO_PI = 6.283185307179586


def derived_report(config: ExperimentConfig) -> dict:
    """DerivedParams plus intermediates, with units in the key names."""
    derived = derive(config)
    if config.drive.kind == "optical":
        e0 = pump_amplitude(config.pump, config.crystal)
    else:
        e0 = None
    return {
        "drive_kind": config.drive.kind,
        "beta": derived.beta,
        "theta_rad": derived.theta,
        "finesse": derived.finesse,
        "reflectivity": derived.reflectivity,
        "tau_s": derived.tau,
        "nu0_per_s": derived.nu0,
        "gamma_per_s": derived.gamma,
        "threshold": derived.threshold,
        "kappa": derived.kappa,
        "omega_rad_per_s": derived.omega,
        "frequency_hz": derived.omega / TWO_PI,
        "epsilon_m": derived.epsilon,
        "mean_length_m": derived.mean_length,
        "harmonic": derived.harmonic,
        "detuning": derived.detuning,
        "pump_amplitude_v_per_m": e0,
    }


def cmd_derive(config: ExperimentConfig) -> dict:
    return derived_report(config)


ANALYTIC_COLUMNS = ("t", "n_scattering", "n_squeeze_lossless", "n_damped",
                    "n_out_damped", "n_out_scattering_cum")


def cmd_analytic(config: ExperimentConfig) -> list:
    """Rows of every closed-form curve on the configured time grid."""
    derived = derive(config)
    level = models.n_intra_scattering(derived.beta, derived.finesse, derived.harmonic)
    rate = models.n_out_rate_scattering(derived.beta, derived.finesse, derived.omega)
    points = config.analytic.points
    t_max = config.analytic.t_max_over_gamma / derived.gamma
    rows = []
    for i in range(points):
        t = 0.0 if points == 1 else t_max * i / (points - 1)
        rows.append((
            t,
            level,
            models.n_squeezing_lossless(t, derived.nu0),
            models.n_damped(t, derived.nu0, derived.gamma),
            models.n_out_damped(t, derived.nu0, derived.gamma),
            rate * t,
        ))
    return rows


SERIES_COLUMNS = ("t", "n_intra", "n_out_cum")
SPECTRUM_COLUMNS = ("mode_index", "omega_rad_per_s", "n_k")


def simulation_spec(config: ExperimentConfig) -> engine.RunSpec:
    derived = derive(config)
    basis = ModeBasis.for_params(derived, count=config.run.basis_size)
    max_trips = config.run.max_round_trips or engine.default_round_trips(derived.finesse)
    return engine.RunSpec(
        derived=derived,
        basis=basis,
        max_round_trips=max_trips,
        record_every=config.run.record_every,
        stationarity_tol=config.run.stationarity_tol,
        stationarity_window=config.run.stationarity_window,
        check_interval=config.run.check_interval,
    )


def simulation_summary(result: engine.SimulationResult) -> dict:
    """Nested summary document written as summary.json."""
    flat = engine.summarize(result)
    derived = result.derived
    return {
        "verdict": {
            "kind": flat["verdict"],
            "level": flat["level"],
            "outflux_rate_per_s": flat["outflux_rate_per_s"],
            "log_slope_per_s": flat["log_slope_per_s"],
            "r_squared": flat["r_squared"],
            "t_stationary_s": flat["t_stationary_s"],
        },
        "comparisons": {
            "scattering_n_intra": flat["scattering_n_intra"],
            "scattering_out_rate_per_s": flat["scattering_out_rate_per_s"],
            "damped_peak_n": flat["damped_peak_n"],
            "expected_log_slope_per_s": flat["expected_log_slope_per_s"],
            "level_ratio_sim_over_scattering": flat["level_ratio_sim_over_scattering"],
            "slope_ratio_sim_over_scattering": flat["slope_ratio_sim_over_scattering"],
            "slope_ratio_sim_over_balance": flat["slope_ratio_sim_over_balance"],
        },
        "flags": {
            "outflux_occupation_counting": True,
        },
        "derived": {
            "beta": derived.beta,
            "theta_rad": derived.theta,
            "finesse": derived.finesse,
            "reflectivity": derived.reflectivity,
            "tau_s": derived.tau,
            "nu0_per_s": derived.nu0,
            "gamma_per_s": derived.gamma,
            "threshold": derived.threshold,
            "omega_rad_per_s": derived.omega,
            "harmonic": derived.harmonic,
            "detuning": derived.detuning,
        },
        "basis": {
            "count": result.basis.count,
            "harmonic": result.basis.harmonic,
            "mean_length_m": result.basis.mean_length,
            "detuning": result.basis.detuning,
        },
        "run": {
            "round_trips": result.round_trips,
            "record_every": result.record_every,
            "stationarity_tol": result.stationarity_tol,
            "stationarity_window": result.stationarity_window,
        },
    }


def cmd_simulate(config: ExperimentConfig) -> tuple:
    """Returns (series_rows, spectrum_rows, summary_dict)."""
    result = engine.run(simulation_spec(config))
    series_rows = list(zip(result.times.tolist(), result.n_intra.tolist(),
                           result.n_out_cum.tolist()))
    frequencies = result.basis.frequencies()
    spectrum_rows = [(k + 1, float(frequencies[k]), float(result.spectrum[k]))
                     for k in range(result.basis.count)]
    return series_rows, spectrum_rows, simulation_summary(result)


def cmd_sweep(config: ExperimentConfig, workers: int = 1) -> list:
    if config.sweep is None:
        raise InvalidConfigError("config has no sweep section")
    axes = {}
    for name in ("beta", "finesse", "harmonic", "detuning", "basis_size"):
        values = getattr(config.sweep, name)
        if values is not None:
            axes[name] = list(values)
    base = derive(config)
    run_settings = {
        "max_round_trips": config.run.max_round_trips,
        "record_every": config.run.record_every,
        "stationarity_tol": config.run.stationarity_tol,
        "stationarity_window": config.run.stationarity_window,
        "check_interval": config.run.check_interval,
    }
    return engine.sweep(base, axes, run_settings=run_settings, workers=workers)


def cmd_compare(config: ExperimentConfig) -> dict:
    derived = derive(config)
    report = models.model_comparison(derived.beta, derived.finesse,
                                     derived.harmonic, derived.omega)
    return report.as_dict()


# ----------------------------------------------------------------------------
# Entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimir-opo",
        description="Closed-form models and a round-trip Gaussian simulator "
                    "for photon generation in a length-modulated cavity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("derive", "compute derived parameters; writes derive.json"),
        ("analytic", "tabulate closed-form curves; writes analytic.csv"),
        ("simulate", "run the round-trip engine; writes series.csv, "
                     "spectrum.csv, summary.json"),
        ("sweep", "run a parameter grid; writes sweep.csv"),
        ("compare", "print the closed-form model comparison as JSON"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", required=True, help="path to the JSON config")
        p.add_argument("--out-dir", default=".", help="output directory")
        p.add_argument("--workers", type=int, default=1,
                       help="parallel workers for sweep points")
        p.add_argument("--seedless", action="store_true",
                       help="no-op guard: all outputs are deterministic; no "
                            "random seed exists to vary")
    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        out = args.out_dir.rstrip("/") or "."
        if args.command == "derive":
            report = cmd_derive(config)
            io.write_json(f"{out}/derive.json", report)
            sys.stdout.write(io.json_text(report))
        elif args.command == "analytic":
            rows = cmd_analytic(config)
            io.write_csv(f"{out}/analytic.csv", ANALYTIC_COLUMNS, rows)
        elif args.command == "simulate":
            series_rows, spectrum_rows, summary = cmd_simulate(config)
            io.write_csv(f"{out}/series.csv", SERIES_COLUMNS, series_rows)
            io.write_csv(f"{out}/spectrum.csv", SPECTRUM_COLUMNS, spectrum_rows)
            io.write_json(f"{out}/summary.json", summary)
            sys.stdout.write(io.json_text(summary))
        elif args.command == "sweep":
            rows = cmd_sweep(config, workers=args.workers)
            table = [[row.get(col) for col in engine.SUMMARY_COLUMNS] for row in rows]
            io.write_csv(f"{out}/sweep.csv", engine.SUMMARY_COLUMNS, table)
        elif args.command == "compare":
            sys.stdout.write(io.json_text(cmd_compare(config)))
    except CasimirOpoError as exc:
        sys.stderr.write(io.json_text(
            {"error": {"category": exc.category, "message": str(exc)}}
        ))
        return 1
    return 0
