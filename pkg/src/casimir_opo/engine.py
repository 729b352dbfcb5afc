"""Simulation driver: trajectories, stationarity/growth classification,
outflux slope measurement, and parameter sweeps.

A trajectory iterates the one-round-trip channel from vacuum, accumulating
emitted photons at full resolution and recording the photon-number series on
a decimated grid. Classification follows two rules:

- stationary: consecutive windowed means of the intracavity photon number
  (window width ``stationarity_window``/gamma) change by less than
  ``stationarity_tol`` relative; the level and the outflux slope are measured
  on the post-detection segment.
- growing: a least-squares line on ln N over the last third of the series
  with R^2 >= 0.99 and positive slope.

Everything is deterministic: identical RunSpec inputs produce bit-identical
results; sweep points are independent and merged in grid order regardless of
worker scheduling.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import analytic
from .errors import (CasimirOpoError, DomainError, InsufficientDataError,
                     InvalidConfigError)
from .modes import (GaussianState, ModeBasis, photon_numbers,
                    round_trip_channel, step_with_outflux)
from .params import DerivedParams, derive_dimensionless

GROWTH_R2_MIN = 0.99
MAX_RECORD_SAMPLES = 100000
RELATIVE_CHANGE_FLOOR = 1e-300


def default_round_trips(finesse: float) -> int:
    """Default horizon: 30*F/pi round trips (about 60 damping times), at
    least 2000 so short cavities still produce a classifiable series."""
    return max(int(math.ceil(30.0 * finesse / math.pi)), 2000)


@dataclass(frozen=True)
class RunSpec:
    """A complete simulation request."""

    derived: DerivedParams
    basis: ModeBasis
    max_round_trips: int
    record_every: Optional[int] = None
    stationarity_tol: float = 1e-3
    stationarity_window: float = 10.0  # in units of 1/gamma
    check_interval: int = 10000

    def validate(self) -> None:
        if self.max_round_trips < 1:
            raise InvalidConfigError("max_round_trips must be >= 1")
        if self.record_every is not None and self.record_every < 1:
            raise InvalidConfigError("record_every must be >= 1")
        if not (0.0 < self.stationarity_tol < 1.0):
            raise InvalidConfigError("stationarity_tol must be in (0, 1)")
        if not (self.stationarity_window > 0.0):
            raise InvalidConfigError("stationarity_window must be > 0")
        if self.check_interval < 1:
            raise InvalidConfigError("check_interval must be >= 1")

    def effective_record_every(self) -> int:
        if self.record_every is not None:
            return self.record_every
        return max(1, int(math.ceil(self.max_round_trips / MAX_RECORD_SAMPLES)))


@dataclass(frozen=True)
class Verdict:
    """Outcome classification of a trajectory."""

    kind: str  # "stationary" | "growing" | "inconclusive"
    level: Optional[float] = None
    outflux_rate: Optional[float] = None
    log_slope: Optional[float] = None
    r_squared: Optional[float] = None
    t_stationary: Optional[float] = None


@dataclass(frozen=True)
class SlopeFit:
    """Least-squares line fit with residual diagnostics."""

    slope: float
    intercept: float
    r_squared: float
    max_abs_residual: float


@dataclass(frozen=True)
class SimulationResult:
    """Recorded trajectory and its classification."""

    times: np.ndarray       # seconds, starting at t = 0
    n_intra: np.ndarray     # total intracavity photon number
    n_out_cum: np.ndarray   # cumulative emitted photons (non-decreasing)
    spectrum: np.ndarray    # final per-mode occupations n_k
    verdict: Verdict
    derived: DerivedParams
    basis: ModeBasis
    round_trips: int
    record_every: int
    stationarity_tol: float
    stationarity_window: float

    def __post_init__(self) -> None:
        if not (len(self.times) == len(self.n_intra) == len(self.n_out_cum)):
            raise InvalidConfigError("result series lengths differ")
        if np.any(np.diff(self.n_out_cum) < 0.0):
            raise InvalidConfigError("cumulative outflux must be non-decreasing")


# ----------------------------------------------------------------------------
# Detection


def detect_stationary(times: np.ndarray, series: np.ndarray, tol: float,
                      window_seconds: float) -> Optional[tuple]:
    """Earliest time after which consecutive windowed means agree within tol.

    Returns (t_s, level) or None; raises InsufficientDataError unless the
    series spans at least three full windows.
    """
    times = np.asarray(times, dtype=float)
    series = np.asarray(series, dtype=float)
    if len(times) < 2:
        raise InsufficientDataError("series has fewer than two samples")
    span = times[-1] - times[0]
    n_windows = int(math.floor(span / window_seconds))
    if n_windows < 3:
        raise InsufficientDataError(
            f"series spans {span!r} s = {span / window_seconds:.2f} windows; "
            "stationarity detection needs at least 3"
        )
    edges = times[0] + window_seconds * np.arange(n_windows + 1)
    means = []
    for i in range(n_windows):
        if i < n_windows - 1:
            mask = (times >= edges[i]) & (times < edges[i + 1])
        else:
            mask = (times >= edges[i]) & (times <= edges[i + 1])
        if not np.any(mask):
            raise InsufficientDataError(
                f"window {i} ({edges[i]!r}..{edges[i + 1]!r} s) holds no samples; "
                "decrease record_every or widen the window"
            )
        means.append(float(np.mean(series[mask])))
    for i in range(n_windows - 1):
        scale = max(abs(means[i + 1]), RELATIVE_CHANGE_FLOOR)
        if abs(means[i + 1] - means[i]) / scale < tol:
            t_s = float(edges[i + 1])
            level = float(np.mean(series[times >= t_s]))
            return t_s, level
    return None


def _line_fit(x: np.ndarray, y: np.ndarray) -> SlopeFit:
    coeffs = np.polyfit(x, y, 1)
    predicted = np.polyval(coeffs, x)
    residuals = y - predicted
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((y - np.mean(y)) ** 2))
    if ss_tot == 0.0:
        r2 = 1.0 if ss_res == 0.0 else 0.0
    else:
        r2 = 1.0 - ss_res / ss_tot
    return SlopeFit(slope=float(coeffs[0]), intercept=float(coeffs[1]),
                    r_squared=r2, max_abs_residual=float(np.max(np.abs(residuals))))


def measure_outflux_slope(result: SimulationResult) -> SlopeFit:
    """Least-squares slope of the cumulative outflux over the post-stationary
    segment, photons per second, with residual diagnostics."""
    if result.verdict.kind != "stationary":
        raise DomainError(
            f"outflux slope is defined for stationary runs; verdict is "
            f"{result.verdict.kind!r}"
        )
    t_s = result.verdict.t_stationary
    mask = result.times >= t_s
    if int(np.sum(mask)) < 2:
        raise InsufficientDataError("fewer than two samples after stationarity")
    return _line_fit(result.times[mask], result.n_out_cum[mask])


def _classify(times: np.ndarray, n_intra: np.ndarray, n_out_cum: np.ndarray,
              tol: float, window_seconds: float) -> Verdict:
    try:
        found = detect_stationary(times, n_intra, tol, window_seconds)
    except InsufficientDataError:
        found = None
    if found is not None:
        t_s, level = found
        mask = times >= t_s
        if int(np.sum(mask)) >= 2:
            fit = _line_fit(times[mask], n_out_cum[mask])
            rate, r2 = fit.slope, fit.r_squared
        else:
            rate, r2 = None, None
        return Verdict(kind="stationary", level=level, outflux_rate=rate,
                       r_squared=r2, t_stationary=t_s)

    # Growth test on the last third of the series.
    start = (2 * len(times)) // 3
    t_seg = times[start:]
    n_seg = n_intra[start:]
    if len(t_seg) >= 3 and np.all(n_seg > 0.0):
        fit = _line_fit(t_seg, np.log(n_seg))
        if fit.slope > 0.0 and fit.r_squared >= GROWTH_R2_MIN:
            return Verdict(kind="growing", log_slope=fit.slope,
                           r_squared=fit.r_squared)
    return Verdict(kind="inconclusive")


# ----------------------------------------------------------------------------
# Trajectory


def run(spec: RunSpec) -> SimulationResult:
    """Iterate the round-trip channel from vacuum and classify the outcome."""
    spec.validate()
    channel = round_trip_channel(spec.derived, spec.basis)
    record_every = spec.effective_record_every()
    round_trip_time = 2.0 * spec.derived.tau

    state = GaussianState.vacuum(spec.basis.count)
    emitted_total = 0.0
    times = [0.0]
    n_intra = [0.0]
    n_out = [0.0]

    for trip in range(1, spec.max_round_trips + 1):
        state, emitted = step_with_outflux(state, channel)
        emitted_total += emitted
        if trip % spec.check_interval == 0:
            try:
                state.check_physical()
            except CasimirOpoError as exc:
                raise type(exc)(f"at round trip {trip}: {exc}") from exc
        if trip % record_every == 0 or trip == spec.max_round_trips:
            times.append(trip * round_trip_time)
            n_intra.append(float(np.sum(photon_numbers(state))))
            n_out.append(emitted_total)

    state.check_physical()
    times_arr = np.array(times)
    n_intra_arr = np.array(n_intra)
    n_out_arr = np.array(n_out)
    window_seconds = spec.stationarity_window / spec.derived.gamma
    verdict = _classify(times_arr, n_intra_arr, n_out_arr,
                        spec.stationarity_tol, window_seconds)
    return SimulationResult(
        times=times_arr,
        n_intra=n_intra_arr,
        n_out_cum=n_out_arr,
        spectrum=photon_numbers(state),
        verdict=verdict,
        derived=spec.derived,
        basis=spec.basis,
        round_trips=spec.max_round_trips,
        record_every=record_every,
        stationarity_tol=spec.stationarity_tol,
        stationarity_window=spec.stationarity_window,
    )


# ----------------------------------------------------------------------------
# Summaries (shared by the CLI and sweeps)


def summarize(result: SimulationResult) -> dict:
    """Flat summary of a run: verdict, measured quantities, and comparisons
    against the closed-form models (null where not applicable)."""
    derived = result.derived
    verdict = result.verdict

    below = derived.beta < derived.threshold
    scattering_level = (
        analytic.n_intra_scattering(derived.beta, derived.finesse, derived.harmonic)
        if below else None
    )
    scattering_rate = (
        analytic.n_out_rate_scattering(derived.beta, derived.finesse, derived.omega)
        if below else None
    )
    peak_n = math.exp(-2.0) * (derived.nu0 / derived.gamma) ** 2

    def ratio(num: Optional[float], den: Optional[float]) -> Optional[float]:
        if num is None or den is None or den == 0.0:
            return None
        return num / den

    balance_rate = None
    if verdict.kind == "stationary" and verdict.level is not None:
        balance_rate = derived.gamma * verdict.level

    return {
        "beta": derived.beta,
        "finesse": derived.finesse,
        "harmonic": derived.harmonic,
        "detuning": derived.detuning,
        "basis_size": result.basis.count,
        "round_trips": result.round_trips,
        "verdict": verdict.kind,
        "level": verdict.level,
        "outflux_rate_per_s": verdict.outflux_rate,
        "log_slope_per_s": verdict.log_slope,
        "r_squared": verdict.r_squared,
        "t_stationary_s": verdict.t_stationary,
        "expected_log_slope_per_s": 2.0 * derived.nu0 - derived.gamma,
        "scattering_n_intra": scattering_level,
        "scattering_out_rate_per_s": scattering_rate,
        "damped_peak_n": peak_n,
        "level_ratio_sim_over_scattering": ratio(verdict.level, scattering_level),
        "slope_ratio_sim_over_scattering": ratio(verdict.outflux_rate, scattering_rate),
        "slope_ratio_sim_over_balance": ratio(verdict.outflux_rate, balance_rate),
        "final_n_intra": float(result.n_intra[-1]),
        "final_n_out": float(result.n_out_cum[-1]),
    }


SUMMARY_COLUMNS = (
    "beta", "finesse", "harmonic", "detuning", "basis_size", "round_trips",
    "verdict", "level", "outflux_rate_per_s", "log_slope_per_s", "r_squared",
    "t_stationary_s", "expected_log_slope_per_s", "scattering_n_intra",
    "scattering_out_rate_per_s", "damped_peak_n",
    "level_ratio_sim_over_scattering", "slope_ratio_sim_over_scattering",
    "slope_ratio_sim_over_balance", "final_n_intra", "final_n_out", "error",
)


# ----------------------------------------------------------------------------
# Sweeps


@dataclass(frozen=True)
class SweepPoint:
    """One grid point: the axis values that differ from the base run."""

    beta: float
    finesse: float
    harmonic: int
    detuning: float
    basis_size: Optional[int] = None


def sweep_grid(base: DerivedParams, axes: dict) -> list:
    """Cartesian grid over the axes dict (keys: beta, finesse, harmonic,
    detuning, basis_size), in that fixed order; omitted axes keep base values."""
    def axis(name: str, default) -> list:
        values = axes.get(name)
        # None means "axis not swept" (use the base value); an explicit empty
        # list is a legitimate zero-point grid.
        return [default] if values is None else list(values)

    betas = axis("beta", base.beta)
    finesses = axis("finesse", base.finesse)
    harmonics = axis("harmonic", base.harmonic)
    detunings = axis("detuning", base.detuning)
    basis_sizes = axis("basis_size", None)
    unknown = set(axes) - {"beta", "finesse", "harmonic", "detuning", "basis_size"}
    if unknown:
        raise InvalidConfigError(f"unknown sweep axes: {sorted(unknown)}")
    points = []
    for b in betas:
        for f in finesses:
            for m in harmonics:
                for d in detunings:
                    for k in basis_sizes:
                        points.append(SweepPoint(beta=b, finesse=f, harmonic=m,
                                                 detuning=d, basis_size=k))
    return points


def _sweep_one(base: DerivedParams, point: SweepPoint,
               run_settings: dict) -> dict:
    derived = derive_dimensionless(
        beta=point.beta, finesse=point.finesse, harmonic=point.harmonic,
        mean_length=base.mean_length, theta=base.theta, detuning=point.detuning,
    )
    basis = ModeBasis.for_params(derived, count=point.basis_size)
    max_trips = run_settings.get("max_round_trips") or default_round_trips(point.finesse)
    spec = RunSpec(
        derived=derived,
        basis=basis,
        max_round_trips=max_trips,
        record_every=run_settings.get("record_every"),
        stationarity_tol=run_settings.get("stationarity_tol", 1e-3),
        stationarity_window=run_settings.get("stationarity_window", 10.0),
        check_interval=run_settings.get("check_interval", 10000),
    )
    summary = summarize(run(spec))
    summary["error"] = ""
    return summary


def sweep(base: DerivedParams, axes: dict, run_settings: Optional[dict] = None,
          workers: int = 1) -> list:
    """Run every grid point; per-point failures are recorded in the row's
    ``error`` column and do not abort the sweep. Rows are returned in grid
    order regardless of worker scheduling."""
    run_settings = dict(run_settings or {})
    points = sweep_grid(base, axes)

    def safe(point: SweepPoint) -> dict:
        try:
            return _sweep_one(base, point, run_settings)
        except CasimirOpoError as exc:
            row = {name: None for name in SUMMARY_COLUMNS}
            row.update({
                "beta": point.beta, "finesse": point.finesse,
                "harmonic": point.harmonic, "detuning": point.detuning,
                "basis_size": point.basis_size,
                "error": f"{exc.category}: {exc}",
            })
            return row

    if workers <= 1 or len(points) <= 1:
        return [safe(p) for p in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(safe, points))
