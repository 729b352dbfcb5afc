"""Experiment configuration: typed structures and JSON ingestion.

The file format is a single JSON document with SI units encoded in field
names (``power_watts``, ``length_m``, ``frequency_hz``, ...). Ordinary
frequencies (Hz) are converted to angular frequencies (rad/s) once, here at
the boundary; everything downstream uses rad/s.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Optional

from .errors import InvalidConfigError, ParseError

TWO_PI = 2.0 * math.pi

DRIVE_KINDS = ("mechanical", "optical")


@dataclass(frozen=True)
class PumpConfig:
    """Pump beam description: power (W), angular frequency (rad/s),
    transverse area (m^2), and phase (rad)."""

    power: float
    frequency: float
    area: float
    phase: float = 0.0

    def validate(self) -> None:
        if not (self.power >= 0.0):
            raise InvalidConfigError("pump.power_watts must be >= 0")
        if not (self.frequency > 0.0):
            raise InvalidConfigError("pump.frequency_hz must be > 0")
        if not (self.area > 0.0):
            raise InvalidConfigError("pump.area_m2 must be > 0")


@dataclass(frozen=True)
class CrystalConfig:
    """Nonlinear crystal description: length (m), mean indices for the
    generated and pump polarizations, effective second-order susceptibility
    (m/V), and position of the near face (m)."""

    length: float
    chi2: float
    index_s: float = 1.0
    index_p: float = 1.0
    position: float = 0.0

    def validate(self) -> None:
        if not (self.length > 0.0):
            raise InvalidConfigError("crystal.length_m must be > 0")
        if not (self.index_s >= 1.0):
            raise InvalidConfigError("crystal.index_s must be >= 1")
        if not (self.index_p >= 1.0):
            raise InvalidConfigError("crystal.index_p must be >= 1")
        if not (self.chi2 >= 0.0):
            raise InvalidConfigError("crystal.chi2_m_per_v must be >= 0")


@dataclass(frozen=True)
class CavityConfig:
    """Cavity description: mean optical length L0 (m, optional if the pump
    frequency pins it through the resonance relation), intensity reflectivity
    per mirror (identical for both), drive harmonic m such that the drive
    frequency is (2*m*pi*c/L0)*(1+detuning), and fractional detuning."""

    reflectivity: float
    harmonic: int
    mean_length: Optional[float] = None
    detuning: float = 0.0

    def validate(self) -> None:
        if not (0.0 < self.reflectivity < 1.0):
            raise InvalidConfigError("cavity.reflectivity must be in (0, 1)")
        if not (isinstance(self.harmonic, int) and self.harmonic >= 1):
            raise InvalidConfigError("cavity.harmonic must be an integer >= 1")
        if self.mean_length is not None and not (self.mean_length > 0.0):
            raise InvalidConfigError("cavity.mean_length_m must be > 0")
        if not (self.detuning > -1.0):
            raise InvalidConfigError("cavity.detuning must be > -1")


@dataclass(frozen=True)
class DriveParams:
    """Drive description. ``kind`` selects mechanical mirror motion or the
    pumped-crystal (optical) analogue; ``beta`` is the dimensionless coupling
    (peak boundary velocity over c), ``epsilon`` the modulation amplitude (m).
    When both beta and epsilon are given, beta = epsilon*Omega/c must hold."""

    kind: str
    beta: Optional[float] = None
    epsilon: Optional[float] = None
    theta: Optional[float] = None

    def validate(self) -> None:
        if self.kind not in DRIVE_KINDS:
            raise InvalidConfigError(
                f"drive.kind must be one of {DRIVE_KINDS}, got {self.kind!r}"
            )
        if self.beta is not None and not (self.beta >= 0.0):
            raise InvalidConfigError("drive.beta must be >= 0")
        if self.epsilon is not None and not (self.epsilon >= 0.0):
            raise InvalidConfigError("drive.epsilon_m must be >= 0")
        if self.kind == "optical" and (self.beta is not None or self.epsilon is not None):
            raise InvalidConfigError(
                "drive.beta/epsilon_m are derived from pump and crystal for the "
                "optical kind; leave them unset"
            )


@dataclass(frozen=True)
class RunSettings:
    """Simulation driver settings (all optional; engine defaults apply)."""

    max_round_trips: Optional[int] = None
    record_every: Optional[int] = None
    stationarity_tol: float = 1e-3
    stationarity_window: float = 10.0
    basis_size: Optional[int] = None
    check_interval: int = 10000

    def validate(self) -> None:
        if self.max_round_trips is not None and self.max_round_trips < 1:
            raise InvalidConfigError("run.max_round_trips must be >= 1")
        if self.record_every is not None and self.record_every < 1:
            raise InvalidConfigError("run.record_every must be >= 1")
        if not (0.0 < self.stationarity_tol < 1.0):
            raise InvalidConfigError("run.stationarity_tol must be in (0, 1)")
        if not (self.stationarity_window > 0.0):
            raise InvalidConfigError("run.stationarity_window must be > 0")
        if self.basis_size is not None and self.basis_size < 1:
            raise InvalidConfigError("run.basis_size must be >= 1")
        if self.check_interval < 1:
            raise InvalidConfigError("run.check_interval must be >= 1")


@dataclass(frozen=True)
class AnalyticSettings:
    """Time grid for the closed-form curve export: t runs from 0 to
    t_max_over_gamma/gamma on ``points`` equally spaced samples."""

    t_max_over_gamma: float = 10.0
    points: int = 1001

    def validate(self) -> None:
        if not (self.t_max_over_gamma > 0.0):
            raise InvalidConfigError("analytic.t_max_over_gamma must be > 0")
        if self.points < 1:
            raise InvalidConfigError("analytic.points must be >= 1")


# Sweep axes in their fixed, deterministic iteration order.
SWEEP_AXES = ("beta", "finesse", "harmonic", "detuning", "basis_size")


@dataclass(frozen=True)
class SweepSettings:
    """Cartesian sweep grid; each axis is a list of values, omitted axes keep
    the base configuration's value."""

    beta: Optional[tuple] = None
    finesse: Optional[tuple] = None
    harmonic: Optional[tuple] = None
    detuning: Optional[tuple] = None
    basis_size: Optional[tuple] = None

    def validate(self) -> None:
        for name in SWEEP_AXES:
            values = getattr(self, name)
            if values is None:
                continue
            for v in values:
                if name in ("harmonic", "basis_size"):
                    if not (isinstance(v, int) and v >= 1):
                        raise InvalidConfigError(
                            f"sweep.{name} values must be integers >= 1"
                        )
                elif not isinstance(v, (int, float)) or isinstance(v, bool):
                    raise InvalidConfigError(f"sweep.{name} values must be numbers")


@dataclass(frozen=True)
class ExperimentConfig:
    """Top-level configuration: pump, crystal, cavity, drive, plus driver
    sections. The pump and crystal blocks are required for the optical drive
    kind and optional for the mechanical kind."""

    cavity: CavityConfig
    drive: DriveParams
    pump: Optional[PumpConfig] = None
    crystal: Optional[CrystalConfig] = None
    run: RunSettings = field(default_factory=RunSettings)
    analytic: AnalyticSettings = field(default_factory=AnalyticSettings)
    sweep: Optional[SweepSettings] = None

    def validate(self) -> None:
        self.cavity.validate()
        self.drive.validate()
        if self.pump is not None:
            self.pump.validate()
        if self.crystal is not None:
            self.crystal.validate()
        self.run.validate()
        self.analytic.validate()
        if self.sweep is not None:
            self.sweep.validate()
        if self.drive.kind == "optical":
            if self.pump is None or self.crystal is None:
                raise InvalidConfigError(
                    "optical drive requires both pump and crystal sections"
                )
        else:
            if self.drive.beta is None and self.drive.epsilon is None:
                raise InvalidConfigError(
                    "mechanical drive requires drive.beta or drive.epsilon_m"
                )
            if self.pump is None and self.cavity.mean_length is None:
                raise InvalidConfigError(
                    "mechanical drive needs cavity.mean_length_m or a pump "
                    "frequency to fix the drive frequency"
                )


# ----------------------------------------------------------------------------
# JSON ingestion


def _require_mapping(obj: Any, where: str) -> dict:
    if not isinstance(obj, dict):
        raise InvalidConfigError(f"{where} must be a JSON object")
    return obj


def _take(raw: dict, where: str, key: str, *, required: bool = False, default: Any = None) -> Any:
    if key in raw:
        return raw.pop(key)
    if required:
        raise InvalidConfigError(f"missing required field {where}.{key}")
    return default


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidConfigError(f"{where} must be a number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise InvalidConfigError(f"{where} must be finite")
    return v


def _integer(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidConfigError(f"{where} must be an integer, got {value!r}")
    return value


def _reject_unknown(raw: dict, where: str) -> None:
    if raw:
        unknown = ", ".join(sorted(raw))
        raise InvalidConfigError(f"unknown field(s) in {where}: {unknown}")


def _parse_pump(raw: Any) -> PumpConfig:
    d = dict(_require_mapping(raw, "pump"))
    power = _number(_take(d, "pump", "power_watts", required=True), "pump.power_watts")
    freq_hz = _number(_take(d, "pump", "frequency_hz", required=True), "pump.frequency_hz")
    area = _number(_take(d, "pump", "area_m2", required=True), "pump.area_m2")
    phase = _number(_take(d, "pump", "phase_rad", default=0.0), "pump.phase_rad")
    _reject_unknown(d, "pump")
    return PumpConfig(power=power, frequency=TWO_PI * freq_hz, area=area, phase=phase)


def _parse_crystal(raw: Any) -> CrystalConfig:
    d = dict(_require_mapping(raw, "crystal"))
    length = _number(_take(d, "crystal", "length_m", required=True), "crystal.length_m")
    chi2 = _number(_take(d, "crystal", "chi2_m_per_v", required=True), "crystal.chi2_m_per_v")
    index_s = _number(_take(d, "crystal", "index_s", default=1.0), "crystal.index_s")
    index_p = _number(_take(d, "crystal", "index_p", default=1.0), "crystal.index_p")
    position = _number(_take(d, "crystal", "position_m", default=0.0), "crystal.position_m")
    _reject_unknown(d, "crystal")
    return CrystalConfig(length=length, chi2=chi2, index_s=index_s,
                         index_p=index_p, position=position)


def _parse_cavity(raw: Any) -> CavityConfig:
    d = dict(_require_mapping(raw, "cavity"))
    reflectivity = _number(_take(d, "cavity", "reflectivity", required=True), "cavity.reflectivity")
    harmonic = _integer(_take(d, "cavity", "harmonic", required=True), "cavity.harmonic")
    mean_length = _take(d, "cavity", "mean_length_m")
    if mean_length is not None:
        mean_length = _number(mean_length, "cavity.mean_length_m")
    detuning = _number(_take(d, "cavity", "detuning", default=0.0), "cavity.detuning")
    _reject_unknown(d, "cavity")
    return CavityConfig(reflectivity=reflectivity, harmonic=harmonic,
                        mean_length=mean_length, detuning=detuning)


def _parse_drive(raw: Any) -> DriveParams:
    d = dict(_require_mapping(raw, "drive"))
    kind = _take(d, "drive", "kind", required=True)
    if not isinstance(kind, str):
        raise InvalidConfigError("drive.kind must be a string")
    beta = _take(d, "drive", "beta")
    if beta is not None:
        beta = _number(beta, "drive.beta")
    epsilon = _take(d, "drive", "epsilon_m")
    if epsilon is not None:
        epsilon = _number(epsilon, "drive.epsilon_m")
    theta = _take(d, "drive", "theta_rad")
    if theta is not None:
        theta = _number(theta, "drive.theta_rad")
    _reject_unknown(d, "drive")
    return DriveParams(kind=kind, beta=beta, epsilon=epsilon, theta=theta)


def _parse_run(raw: Any) -> RunSettings:
    d = dict(_require_mapping(raw, "run"))
    max_round_trips = _take(d, "run", "max_round_trips")
    if max_round_trips is not None:
        max_round_trips = _integer(max_round_trips, "run.max_round_trips")
    record_every = _take(d, "run", "record_every")
    if record_every is not None:
        record_every = _integer(record_every, "run.record_every")
    tol = _number(_take(d, "run", "stationarity_tol", default=1e-3), "run.stationarity_tol")
    window = _number(_take(d, "run", "stationarity_window", default=10.0),
                     "run.stationarity_window")
    basis_size = _take(d, "run", "basis_size")
    if basis_size is not None:
        basis_size = _integer(basis_size, "run.basis_size")
    check_interval = _integer(_take(d, "run", "check_interval", default=10000),
                              "run.check_interval")
    _reject_unknown(d, "run")
    return RunSettings(max_round_trips=max_round_trips, record_every=record_every,
                       stationarity_tol=tol, stationarity_window=window,
                       basis_size=basis_size, check_interval=check_interval)


def _parse_analytic(raw: Any) -> AnalyticSettings:
    d = dict(_require_mapping(raw, "analytic"))
    t_max = _number(_take(d, "analytic", "t_max_over_gamma", default=10.0),
                    "analytic.t_max_over_gamma")
    points = _integer(_take(d, "analytic", "points", default=1001), "analytic.points")
    _reject_unknown(d, "analytic")
    return AnalyticSettings(t_max_over_gamma=t_max, points=points)


def _parse_sweep(raw: Any) -> SweepSettings:
    # Structural problems in the grid spec are parse errors; value-level
    # problems (wrong sign, non-integer harmonic) are config errors.
    if not isinstance(raw, dict):
        raise ParseError("sweep must be a JSON object of axis lists")
    d = dict(raw)
    axes: dict = {}
    for name in SWEEP_AXES:
        values = _take(d, "sweep", name)
        if values is None:
            continue
        if not isinstance(values, list):
            raise ParseError(f"sweep.{name} must be a list")
        axes[name] = tuple(values)
    if d:
        unknown = ", ".join(sorted(d))
        raise ParseError(f"unknown sweep axis/axes: {unknown}")
    return SweepSettings(**axes)


def config_from_dict(raw: Any) -> ExperimentConfig:
    d = dict(_require_mapping(raw, "config"))
    cavity = _parse_cavity(_take(d, "config", "cavity", required=True))
    drive = _parse_drive(_take(d, "config", "drive", required=True))
    pump_raw = _take(d, "config", "pump")
    pump = _parse_pump(pump_raw) if pump_raw is not None else None
    crystal_raw = _take(d, "config", "crystal")
    crystal = _parse_crystal(crystal_raw) if crystal_raw is not None else None
    run_raw = _take(d, "config", "run")
    run = _parse_run(run_raw) if run_raw is not None else RunSettings()
    analytic_raw = _take(d, "config", "analytic")
    analytic = _parse_analytic(analytic_raw) if analytic_raw is not None else AnalyticSettings()
    sweep_raw = _take(d, "config", "sweep")
    sweep = _parse_sweep(sweep_raw) if sweep_raw is not None else None
    _reject_unknown(d, "config")
    cfg = ExperimentConfig(cavity=cavity, drive=drive, pump=pump, crystal=crystal,
                           run=run, analytic=analytic, sweep=sweep)
    cfg.validate()
    return cfg


def load_config(path: str) -> ExperimentConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON in {path} at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc
    return config_from_dict(raw)


def config_to_dict(cfg: ExperimentConfig) -> dict:
    """Normalized file-form dictionary (defaults materialized, Hz units).

    parse -> normalize -> re-emit -> parse yields an equal structure.
    """
    out: dict = {
        "cavity": {
            "reflectivity": cfg.cavity.reflectivity,
            "harmonic": cfg.cavity.harmonic,
            "mean_length_m": cfg.cavity.mean_length,
            "detuning": cfg.cavity.detuning,
        },
        "drive": {
            "kind": cfg.drive.kind,
            "beta": cfg.drive.beta,
            "epsilon_m": cfg.drive.epsilon,
            "theta_rad": cfg.drive.theta,
        },
        "run": {
            "max_round_trips": cfg.run.max_round_trips,
            "record_every": cfg.run.record_every,
            "stationarity_tol": cfg.run.stationarity_tol,
            "stationarity_window": cfg.run.stationarity_window,
            "basis_size": cfg.run.basis_size,
            "check_interval": cfg.run.check_interval,
        },
        "analytic": {
            "t_max_over_gamma": cfg.analytic.t_max_over_gamma,
            "points": cfg.analytic.points,
        },
    }
    if cfg.pump is not None:
        out["pump"] = {
            "power_watts": cfg.pump.power,
            "frequency_hz": cfg.pump.frequency / TWO_PI,
            "area_m2": cfg.pump.area,
            "phase_rad": cfg.pump.phase,
        }
    if cfg.crystal is not None:
        out["crystal"] = {
            "length_m": cfg.crystal.length,
            "chi2_m_per_v": cfg.crystal.chi2,
            "index_s": cfg.crystal.index_s,
            "index_p": cfg.crystal.index_p,
            "position_m": cfg.crystal.position,
        }
    if cfg.sweep is not None:
        sweep_out = {}
        for name in SWEEP_AXES:
            values = getattr(cfg.sweep, name)
            if values is not None:
                sweep_out[name] = list(values)
        out["sweep"] = sweep_out
    return out
