"""Acceptance suite. Each criterion A1..A9 is a group of test functions named
``test_a<N>_...``; the terminal summary prints one PASS/FAIL line per
criterion (see conftest). Failing checks are genuine disagreements between
the two model families this package implements and are documented inline;
tolerances are never loosened to force a pass.
"""

import math
import time
from decimal import Decimal

import numpy as np
import pytest

import _oracles
import conftest
from casimir_opo import analytic, cli, engine, modes
from casimir_opo.config import config_from_dict
from casimir_opo.params import derive_dimensionless

TWO_PI = 2.0 * math.pi

A8_ELAPSED = {}


def timed_run(spec):
    start = time.perf_counter()
    result = engine.run(spec)
    return result, time.perf_counter() - start


def spec_for(beta, finesse, harmonic=1, count=None, max_round_trips=None,
             record_every=1):
    derived = derive_dimensionless(beta, finesse, harmonic=harmonic)
    basis = modes.ModeBasis.for_params(derived, count=count)
    if max_round_trips is None:
        max_round_trips = engine.default_round_trips(finesse)
    return engine.RunSpec(derived=derived, basis=basis,
                          max_round_trips=max_round_trips,
                          record_every=record_every)


# ----------------------------------------------------------------------------
# A1 — derived-parameter pipeline magnitudes


def test_a1_optical_pipeline_magnitudes():
    """1 W pump at 3e14 Hz over 1e-10 m^2 through a 1e-7 m crystal with
    chi2 = 1e-11 m/V: kappa lands near 1e-5 and the effective drive strength
    near 1e-6 (within a factor 5)."""
    start = time.perf_counter()
    config = config_from_dict({
        "cavity": {"reflectivity": 0.9996858900774958, "harmonic": 1},
        "drive": {"kind": "optical"},
        "pump": {"power_watts": 1.0, "frequency_hz": 3e14, "area_m2": 1e-10},
        "crystal": {"length_m": 1e-7, "chi2_m_per_v": 1e-11},
    })
    report = cli.derived_report(config)
    assert 0.5e-5 <= report["kappa"] <= 5e-5, f"kappa = {report['kappa']!r}"
    assert 1e-6 / 5.0 <= report["beta"] <= 1e-6 * 5.0, f"beta = {report['beta']!r}"
    assert time.perf_counter() - start < 1.0


# ----------------------------------------------------------------------------
# A2 — closed-form emission-rate magnitudes


def test_a2_optical_emission_rate_magnitude():
    """Stationary emission rate at beta = 1e-6, F = 1e4, drive 3e14 Hz,
    against the magnitude band [3e4, 3e5] photons/s.

    The closed form (2/3) beta^2 (F/pi) (Omega/2pi) evaluates to about
    6.4e5 photons/s here, a factor ~2 above the band's top; the band is kept
    as the documented calibration target."""
    start = time.perf_counter()
    rate = analytic.n_out_rate_scattering(1e-6, 1e4, TWO_PI * 3e14)
    assert time.perf_counter() - start < 1.0
    assert 3e4 <= rate <= 3e5, (
        f"optical emission rate {rate!r} photons/s outside [3e4, 3e5]")


def test_a2_mechanical_emission_rate_magnitude():
    start = time.perf_counter()
    rate = analytic.n_out_rate_scattering(1e-9, 1e4, TWO_PI * 5e8)
    assert time.perf_counter() - start < 1.0
    assert 3e-7 <= rate <= 3e-6, (
        f"mechanical emission rate {rate!r} photons/s outside [3e-7, 3e-6]")


# ----------------------------------------------------------------------------
# A3 — threshold and flux-balance identities


def test_a3_identities_over_randomized_parameters():
    """Over 100 random valid parameter sets: (i) at beta = pi/2F the gain
    rate doubles the loss rate, 2 nu0 = gamma; (ii) gamma times the
    stationary level equals the emission rate. Both to 1e-12 relative."""
    start = time.perf_counter()
    rng = np.random.default_rng(20260814)
    for _ in range(100):
        finesse = 10.0 ** rng.uniform(1.0, 5.0)
        harmonic = int(rng.integers(1, 4))
        mean_length = 10.0 ** rng.uniform(-6.0, -2.0)
        thr = math.pi / (2.0 * finesse)

        at_thr = derive_dimensionless(thr, finesse, harmonic=harmonic,
                                      mean_length=mean_length)
        assert abs(2.0 * at_thr.nu0 - at_thr.gamma) <= 1e-12 * at_thr.gamma

        beta = float(rng.uniform(0.01, 0.99)) * thr
        d = derive_dimensionless(beta, finesse, harmonic=harmonic,
                                 mean_length=mean_length)
        level = analytic.n_intra_scattering(beta, finesse, harmonic)
        rate = analytic.n_out_rate_scattering(beta, finesse, d.omega)
        assert abs(d.gamma * level - rate) <= 1e-12 * rate
    assert time.perf_counter() - start < 1.0


# ----------------------------------------------------------------------------
# A4 — damped-model peak


def test_a4_peak_calculus_identity():
    """Numerical maximization of (nu0 t)^2 e^(-gamma t) lands on
    (2/gamma, e^-2 (2 nu0/gamma)^2) to 1e-9 relative.

    The objective is evaluated in 40-digit decimal arithmetic: in double
    precision the peak is flat to within evaluation noise over a ~1.5e-8
    relative span, which no maximizer can resolve to 1e-9."""
    start = time.perf_counter()
    nu0, gamma = Decimal("0.7"), Decimal("11.3")
    t_num, n_num = _oracles.golden_section_max_decimal(
        lambda t: (nu0 * t) ** 2 * (-gamma * t).exp(),
        Decimal("1e-7"), Decimal(30) / gamma)
    assert t_num == pytest.approx(2.0 / 11.3, rel=1e-9)
    assert n_num == pytest.approx(
        math.exp(-2.0) * (2.0 * 0.7 / 11.3) ** 2, rel=1e-9)
    assert time.perf_counter() - start < 1.0


def test_a4_peak_value_at_reference_point():
    """At beta = 1e-6, F = 1e4 the peak value is e^-2 (beta F / pi)^2
    = 1.3712331086104636e-06, to 1e-6 relative."""
    start = time.perf_counter()
    derived = derive_dimensionless(1e-6, 1e4)
    t_peak, n_peak = analytic.stationary_peak(derived.nu0, derived.gamma)
    assert n_peak == pytest.approx(1.3712331086104636e-06, rel=1e-6)
    assert t_peak == pytest.approx(2.0 / derived.gamma, rel=1e-12)
    assert time.perf_counter() - start < 1.0


# ----------------------------------------------------------------------------
# A5 — engine vs stationary scattering model
# Reference run: m = 1, F = 100, beta = 0.1 threshold, 14 modes, 2000 round
# trips (>= 20 F/pi), one sample per trip.


@pytest.fixture(scope="module")
def a5_run():
    beta = 0.1 * math.pi / 200.0
    spec = spec_for(beta, 100.0, count=14, max_round_trips=2000)
    result, elapsed = timed_run(spec)
    return spec, result, elapsed


def test_a5_verdict_is_stationary(a5_run):
    spec, result, elapsed = a5_run
    assert result.round_trips >= 20.0 * 100.0 / math.pi
    assert result.verdict.kind == "stationary"
    assert elapsed < 60.0


def test_a5_level_within_30pct_of_scattering(a5_run):
    """Stationary intracavity photon number against the scattering-model
    level (2m/3) beta^2 (F/pi)^2.

    The engine's gain-loss fixed point sits near e^2/2 times the scattering
    level (measured ratio ~2.94), so the 30% band fails; the check is kept
    as the numerical adjudication between the two model families."""
    spec, result, _ = a5_run
    expected = analytic.n_intra_scattering(spec.derived.beta, 100.0, 1)
    ratio = result.verdict.level / expected
    assert abs(ratio - 1.0) <= 0.3, (
        f"stationary level / scattering level = {ratio!r}, outside 30%")


def test_a5_outflux_slope_within_30pct_of_scattering_rate(a5_run):
    """Post-stationary outflux slope against the scattering-model rate
    (2/3) beta^2 (F/pi) (Omega/2pi); fails together with the level check
    (same ~2.9x factor) and is kept as documentation of that disagreement."""
    spec, result, _ = a5_run
    fit = engine.measure_outflux_slope(result)
    expected = analytic.n_out_rate_scattering(spec.derived.beta, 100.0,
                                              spec.derived.omega)
    ratio = fit.slope / expected
    assert abs(ratio - 1.0) <= 0.3, (
        f"outflux slope / scattering rate = {ratio!r}, outside 30%")


def test_a5_outflux_slope_within_10pct_of_damping_balance(a5_run):
    """Internal consistency: emitted flux equals gamma times the stationary
    occupation within 10%."""
    spec, result, _ = a5_run
    fit = engine.measure_outflux_slope(result)
    balance = spec.derived.gamma * result.verdict.level
    assert fit.slope == pytest.approx(balance, rel=0.1)


# ----------------------------------------------------------------------------
# A6 — threshold dichotomy


def test_a6_above_threshold_grows_at_net_gain_rate():
    beta = 2.0 * math.pi / 200.0
    spec = spec_for(beta, 100.0, count=14, max_round_trips=2000)
    result, elapsed = timed_run(spec)
    assert result.verdict.kind == "growing"
    expected = 2.0 * spec.derived.nu0 - spec.derived.gamma
    assert result.verdict.log_slope == pytest.approx(expected, rel=0.3)
    assert elapsed < 120.0


def test_a6_below_threshold_stays_stationary():
    beta = 0.5 * math.pi / 200.0
    spec = spec_for(beta, 100.0, count=14, max_round_trips=2000)
    result, elapsed = timed_run(spec)
    assert result.verdict.kind == "stationary"
    assert elapsed < 120.0


# ----------------------------------------------------------------------------
# A7 — short-time universality


def test_a7_short_time_quadratic_growth():
    """In the window nu0 t <= 0.05 and gamma t <= 0.1 the simulated
    occupation matches (nu0 t)^2 within 5%, independent of all other
    parameters (m = 1 here)."""
    finesse = 1e4
    beta = 2.0 * math.pi / (2.0 * finesse)
    spec = spec_for(beta, finesse, max_round_trips=79)
    result, elapsed = timed_run(spec)
    nu0, gamma = spec.derived.nu0, spec.derived.gamma
    checked = 0
    for t, n in zip(result.times[1:], result.n_intra[1:]):
        if nu0 * t <= 0.05 and gamma * t <= 0.1:
            expected = (nu0 * t) ** 2
            assert n == pytest.approx(expected, rel=0.05), (
                f"at nu0*t = {nu0 * t!r}: N = {n!r} vs (nu0 t)^2 = {expected!r}")
            checked += 1
    assert checked >= 50  # the window must actually be sampled
    assert elapsed < 10.0


# ----------------------------------------------------------------------------
# A8 — structural invariants (shared runtime budget asserted at the end)


def test_a8_symplecticity_of_drive_and_round_trip():
    start = time.perf_counter()
    for harmonic, beta, theta in [(1, 1e-6, 0.0), (2, 1e-3, 0.7),
                                  (3, 0.2, -1.1)]:
        derived = derive_dimensionless(beta, 1e3, harmonic=harmonic,
                                       theta=theta)
        basis = modes.ModeBasis.for_params(derived)
        drive = modes.drive_generator(beta, theta, basis)
        assert drive.symplecticity_defect() <= 1e-10
        channel = modes.round_trip_channel(derived, basis)
        assert channel.symplectic.symplecticity_defect() <= 1e-10
    A8_ELAPSED["symplecticity"] = time.perf_counter() - start


def test_a8_channel_complete_positivity():
    start = time.perf_counter()
    for finesse, factor, harmonic in [(100.0, 0.1, 1), (1e3, 0.9, 2),
                                      (1e4, 2.0, 1)]:
        beta = factor * math.pi / (2.0 * finesse)
        derived = derive_dimensionless(beta, finesse, harmonic=harmonic)
        basis = modes.ModeBasis.for_params(derived)
        channel = modes.round_trip_channel(derived, basis)
        assert channel.complete_positivity_margin() >= -modes.CP_TOL
    A8_ELAPSED["complete-positivity"] = time.perf_counter() - start


def test_a8_physicality_over_one_million_steps():
    """A million round trips below threshold: the state must stay physical
    at every internal checkpoint (every 10^4 trips) and the level must land
    on the exact fixed point."""
    beta = 0.5 * math.pi / 2000.0
    spec = spec_for(beta, 1000.0, record_every=None, max_round_trips=10**6)
    result, elapsed = timed_run(spec)
    assert result.verdict.kind == "stationary"
    expected = _oracles.stationary_total(beta, spec.derived.reflectivity, 1)
    assert result.verdict.level == pytest.approx(expected, rel=1e-6)
    assert np.all(np.isfinite(result.spectrum))
    A8_ELAPSED["million-steps"] = elapsed


def test_a8_zero_drive_yields_zero_photons():
    start = time.perf_counter()
    result = engine.run(spec_for(0.0, 100.0, max_round_trips=2000))
    assert np.array_equal(result.n_intra, np.zeros(len(result.times)))
    assert np.array_equal(result.n_out_cum, np.zeros(len(result.times)))
    assert result.verdict.level == 0.0
    A8_ELAPSED["zero-drive"] = time.perf_counter() - start


def test_a8_pair_symmetry_of_spectrum():
    start = time.perf_counter()
    beta = 0.5 * math.pi / 200.0
    result = engine.run(spec_for(beta, 100.0, harmonic=2, max_round_trips=2000))
    spectrum = result.spectrum
    for k in (1, 2):  # partners (1,3) and the self-paired k = 2
        partner = 4 - k
        assert spectrum[k - 1] == pytest.approx(spectrum[partner - 1],
                                                rel=1e-6)
    A8_ELAPSED["pair-symmetry"] = time.perf_counter() - start


def test_a8_truncation_convergence_on_doubling():
    start = time.perf_counter()
    beta = 0.5 * math.pi / 200.0
    levels = []
    for count in (8, 16):
        result = engine.run(spec_for(beta, 100.0, harmonic=2, count=count,
                                     max_round_trips=2000))
        levels.append(result.verdict.level)
    assert levels[1] == pytest.approx(levels[0], rel=1e-2)
    A8_ELAPSED["truncation"] = time.perf_counter() - start


def test_a8_total_runtime_within_budget():
    assert len(A8_ELAPSED) == 6, f"missing invariant timings: {A8_ELAPSED}"
    total = sum(A8_ELAPSED.values())
    assert total < 300.0, f"invariant checks took {total:.1f} s"


# ----------------------------------------------------------------------------
# A9 — harmonic-number scaling (reported, not asserted)


def test_a9_harmonic_scaling_is_reported():
    """Sweeping the drive harmonic m in {1, 2, 3} at fixed beta and finesse
    must produce stationary levels and record whether their ratios are
    proportional to m within 30%. The proportionality itself is a reported
    measurement, not an assertion."""
    thr = math.pi / 200.0
    base = derive_dimensionless(0.1 * thr, 100.0)
    rows = engine.sweep(base, {"harmonic": [1, 2, 3]},
                        run_settings={"record_every": 1})
    assert [row["error"] for row in rows] == ["", "", ""]
    assert [row["verdict"] for row in rows] == ["stationary"] * 3
    levels = [row["level"] for row in rows]
    assert all(math.isfinite(level) and level > 0.0 for level in levels)
    ratios = [level / levels[0] for level in levels]
    deviations = [abs(r / m - 1.0) for r, m in zip(ratios, (1, 2, 3))]
    consistent = max(deviations) <= 0.3
    conftest.NOTES["A9"] = (
        f" — level ratios m=1:2:3 = 1 : {ratios[1]:.3f} : {ratios[2]:.3f}; "
        f"proportional to m within 30%: {consistent} "
        f"(max deviation {max(deviations):.1%})")
