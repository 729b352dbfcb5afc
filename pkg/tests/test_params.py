"""Derivation pipeline: physical configs to dimensionless parameters.

Expected values are frozen from independent hand evaluations of the closed
formulas (see _oracles.py for the shared oracle helpers).
"""

import math

import pytest

from casimir_opo import errors, params
from casimir_opo.config import (CavityConfig, CrystalConfig, DriveParams,
                                ExperimentConfig, PumpConfig)
from casimir_opo.constants import SPEED_OF_LIGHT

TWO_PI = 2.0 * math.pi

# Reference optical configuration: 1 W pump of 3e14 Hz focused to 1e-10 m^2
# on a 1e-7 m crystal with chi2 = 1e-11 m/V and unit indices.
PUMP = PumpConfig(power=1.0, frequency=TWO_PI * 3e14, area=1e-10)
CRYSTAL = CrystalConfig(length=1e-7, chi2=1e-11)

# Frozen oracle values (independent evaluation of the formulas):
#   E0      = sqrt(P / (2 eps0 c A n_p))
#   kappa   = E0 * chi2
#   eps_opt = (l / 2 n_s) * kappa
#   beta    = eps_opt * Omega / c
#   theta   = theta_p + Omega n_p (x0 + l/2)/c - pi/2
E0_EXPECTED = 1372461.8640728598
KAPPA_EXPECTED = 1.3724618640728596e-05
EPS_OPT_EXPECTED = 6.862309320364298e-13
BETA_OPT_EXPECTED = 4.314701048453442e-06
THETA_OPT_EXPECTED = -1.2564195735021444
PUMP_WAVELENGTH_EXPECTED = 9.993081933333334e-07


def test_pump_amplitude_frozen_value():
    assert params.pump_amplitude(PUMP, CRYSTAL) == pytest.approx(E0_EXPECTED, rel=1e-12)


def test_kappa_frozen_value():
    assert params.kappa(PUMP, CRYSTAL) == pytest.approx(KAPPA_EXPECTED, rel=1e-12)


def test_epsilon_opt_frozen_value():
    assert params.epsilon_opt(PUMP, CRYSTAL) == pytest.approx(EPS_OPT_EXPECTED, rel=1e-12)


def test_beta_optical_frozen_value():
    assert params.beta_optical(PUMP, CRYSTAL) == pytest.approx(BETA_OPT_EXPECTED, rel=1e-12)


def test_drive_phase_frozen_value():
    assert params.drive_phase(PUMP, CRYSTAL) == pytest.approx(THETA_OPT_EXPECTED, rel=1e-12)


def test_pump_wavelength():
    assert params.pump_wavelength(PUMP) == pytest.approx(PUMP_WAVELENGTH_EXPECTED, rel=1e-12)


def test_pump_amplitude_scales_inverse_sqrt_of_index():
    heavy = CrystalConfig(length=1e-7, chi2=1e-11, index_p=4.0)
    assert params.pump_amplitude(PUMP, heavy) == pytest.approx(E0_EXPECTED / 2.0, rel=1e-12)


def test_thin_crystal_gate_rejects_wavelength_size():
    thick = CrystalConfig(length=PUMP_WAVELENGTH_EXPECTED, chi2=1e-11)
    with pytest.raises(errors.ModelValidityError):
        params.epsilon_opt(PUMP, thick)


def test_thin_crystal_gate_accepts_below_fraction():
    thin = CrystalConfig(length=0.19 * PUMP_WAVELENGTH_EXPECTED, chi2=1e-11)
    params.check_thin_crystal(PUMP, thin)  # must not raise


def test_effective_index_bounded_by_modulation_amplitude():
    amplitude = KAPPA_EXPECTED / 2.0
    for t in (0.0, 1e-16, 7e-16, 3e-15):
        value = params.effective_index(t, PUMP, CRYSTAL)
        assert abs(value - 1.0) <= amplitude * (1.0 + 1e-12)


def test_cavity_length_oscillates_about_mean():
    length = params.cavity_length(0.0, 1e-6, 1e-13, TWO_PI * 3e14, 0.0)
    assert length == pytest.approx(1e-6, abs=2e-13)
    peak = params.cavity_length(0.25 / 3e14, 1e-6, 1e-13, TWO_PI * 3e14, 0.0)
    assert peak == pytest.approx(1e-6 + 1e-13, rel=1e-12)


def test_beta_from_epsilon_frozen_value():
    # 0.05 nm boundary motion at 1 GHz
    beta = params.beta_from_epsilon(0.05e-9, TWO_PI * 1e9)
    assert beta == pytest.approx(1.047922510975841e-09, rel=1e-12)


def test_finesse_reflectivity_round_trip():
    for finesse in (10.0, 100.0, 1e4, 5.5e5):
        r = params.reflectivity_from_finesse(finesse)
        assert 0.0 < r < 1.0
        # log(r) with r near 1 amplifies rounding by ~F/pi, so the achievable
        # round-trip accuracy degrades linearly in the finesse.
        tolerance = max(1e-14, 1e-15 * finesse)
        assert params.finesse_from_reflectivity(r) == pytest.approx(finesse, rel=tolerance)


def test_mean_optical_length_adds_crystal_excess():
    crystal = CrystalConfig(length=1e-7, chi2=0.0, index_s=1.5)
    assert params.mean_optical_length(1e-6, crystal) == pytest.approx(1.05e-6, rel=1e-12)


def test_resonance_relations_invert_each_other():
    omega = params.resonant_omega(1e-6, 2, 0.01)
    assert params.resonant_mean_length(omega, 2, 0.01) == pytest.approx(1e-6, rel=1e-12)


def _optical_config(**overrides):
    fields = {
        "cavity": CavityConfig(reflectivity=math.exp(-math.pi / 1e4), harmonic=1),
        "drive": DriveParams(kind="optical"),
        "pump": PUMP,
        "crystal": CRYSTAL,
    }
    fields.update(overrides)
    return ExperimentConfig(**fields)


def test_derive_optical_pipeline():
    derived = params.derive(_optical_config())
    assert derived.kappa == pytest.approx(KAPPA_EXPECTED, rel=1e-12)
    assert derived.epsilon == pytest.approx(EPS_OPT_EXPECTED, rel=1e-12)
    assert derived.beta == pytest.approx(BETA_OPT_EXPECTED, rel=1e-12)
    assert derived.theta == pytest.approx(THETA_OPT_EXPECTED, rel=1e-12)
    assert derived.omega == pytest.approx(TWO_PI * 3e14, rel=1e-12)
    # mean length fixed by the resonance relation Omega = 2 m pi c / L0
    assert derived.mean_length == pytest.approx(PUMP_WAVELENGTH_EXPECTED, rel=1e-12)
    assert derived.tau == pytest.approx(derived.mean_length / SPEED_OF_LIGHT, rel=1e-12)
    assert derived.nu0 == pytest.approx(derived.beta / derived.tau, rel=1e-12)
    assert derived.gamma == pytest.approx(
        math.pi / (derived.finesse * derived.tau), rel=1e-12)


def test_derive_zero_power_zeroes_all_drive_quantities():
    config = _optical_config(pump=PumpConfig(power=0.0, frequency=TWO_PI * 3e14, area=1e-10))
    derived = params.derive(config)
    assert derived.kappa == 0.0
    assert derived.epsilon == 0.0
    assert derived.beta == 0.0
    assert derived.nu0 == 0.0


def test_derive_rejects_inconsistent_pump_and_length():
    cavity = CavityConfig(reflectivity=0.99, harmonic=1, mean_length=2e-6)
    with pytest.raises(errors.InvalidConfigError):
        params.derive(_optical_config(cavity=cavity))


def test_derive_accepts_consistent_pump_and_length():
    cavity = CavityConfig(reflectivity=0.99, harmonic=1,
                          mean_length=PUMP_WAVELENGTH_EXPECTED)
    derived = params.derive(_optical_config(cavity=cavity))
    assert derived.mean_length == PUMP_WAVELENGTH_EXPECTED


def _mechanical_config(drive, cavity=None):
    return ExperimentConfig(
        cavity=cavity or CavityConfig(reflectivity=0.99, harmonic=1, mean_length=1e-6),
        drive=drive,
    )


def test_derive_mechanical_beta_direct():
    derived = params.derive(_mechanical_config(DriveParams(kind="mechanical", beta=1e-6)))
    assert derived.beta == 1e-6
    assert derived.theta == 0.0
    assert derived.kappa == 0.0
    assert derived.epsilon == pytest.approx(
        1e-6 * SPEED_OF_LIGHT / derived.omega, rel=1e-12)
    assert derived.tau == pytest.approx(3.3356409519815205e-15, rel=1e-12)


def test_derive_mechanical_epsilon_converts_to_beta():
    drive = DriveParams(kind="mechanical", epsilon=1e-13)
    derived = params.derive(_mechanical_config(drive))
    assert derived.beta == pytest.approx(
        1e-13 * derived.omega / SPEED_OF_LIGHT, rel=1e-12)


def test_derive_mechanical_consistent_beta_epsilon_pair():
    omega = params.resonant_omega(1e-6, 1)
    beta = params.beta_from_epsilon(1e-13, omega)
    derived = params.derive(_mechanical_config(
        DriveParams(kind="mechanical", beta=beta, epsilon=1e-13)))
    assert derived.beta == pytest.approx(beta, rel=1e-12)


def test_derive_mechanical_inconsistent_beta_epsilon_pair():
    with pytest.raises(errors.InvalidConfigError):
        params.derive(_mechanical_config(
            DriveParams(kind="mechanical", beta=1e-6, epsilon=1e-13)))


def test_derive_theta_override():
    drive = DriveParams(kind="mechanical", beta=1e-6, theta=0.7)
    assert params.derive(_mechanical_config(drive)).theta == 0.7


def test_derive_dimensionless_identities():
    derived = params.derive_dimensionless(beta=1e-4, finesse=250.0, harmonic=2)
    assert derived.threshold == pytest.approx(math.pi / 500.0, rel=1e-15)
    assert derived.gamma * derived.tau == pytest.approx(math.pi / 250.0, rel=1e-15)
    assert derived.nu0 * derived.tau == pytest.approx(1e-4, rel=1e-15)
    # at beta = threshold the gain-loss balance 2 nu0 = gamma is exact
    at_thr = params.derive_dimensionless(beta=derived.threshold, finesse=250.0)
    assert 2.0 * at_thr.nu0 == pytest.approx(at_thr.gamma, rel=1e-14)


def test_derive_dimensionless_rejects_bad_inputs():
    with pytest.raises(errors.InvalidConfigError):
        params.derive_dimensionless(beta=-1e-6, finesse=100.0)
    with pytest.raises(errors.InvalidConfigError):
        params.derive_dimensionless(beta=1e-6, finesse=0.0)
    with pytest.raises(errors.InvalidConfigError):
        params.derive_dimensionless(beta=1e-6, finesse=100.0, harmonic=0)


def test_require_below_threshold_names_threshold_value():
    with pytest.raises(errors.DomainError) as excinfo:
        params.require_below_threshold(1.0, 100.0, where="unit test")
    assert repr(math.pi / 200.0) in str(excinfo.value)


def test_derived_params_positivity_guard():
    with pytest.raises(errors.InvalidConfigError):
        params.DerivedParams(
            beta=1e-6, theta=0.0, finesse=-1.0, reflectivity=0.9, tau=1e-15,
            nu0=1.0, gamma=1.0, threshold=1.0, kappa=0.0, omega=1.0,
            epsilon=1e-13, mean_length=1e-6, harmonic=1, detuning=0.0,
        )
