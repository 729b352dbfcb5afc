"""Derivation pipeline: physical experiment description -> dimensionless
simulation parameters.

Conventions fixed here and used everywhere else:

- tau = L0/c is the single-pass (half round-trip) time.
- Finesse F = -pi/ln(r) for intensity reflectivity r per mirror, so that
  r = e^(-2*rho) gives F = pi/(2*rho).
- Energy damping rate gamma = pi/(F*tau).
- Squeezing growth rate nu0 = beta/tau; with these definitions the
  oscillation threshold beta_thr = pi/(2F) satisfies 2*nu0(beta_thr) = gamma
  exactly (gain balances loss).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import CavityConfig, CrystalConfig, ExperimentConfig, PumpConfig
from .constants import SPEED_OF_LIGHT, VACUUM_PERMITTIVITY
from .errors import DomainError, InvalidConfigError, ModelValidityError

# Maximum crystal length as a fraction of the pump wavelength for the
# thin-crystal spatial averaging to remain valid.
THIN_CRYSTAL_MAX_FRACTION = 0.2

# Relative tolerance for cross-checks between redundant config inputs
# (resonance relation, beta vs epsilon*Omega/c).
CONSISTENCY_RTOL = 1e-9


@dataclass(frozen=True)
class DerivedParams:
    """Dimensionless parameters governing both the closed-form models and the
    round-trip engine, plus the plumbing fields needed to rebuild the cavity
    geometry (drive phase, reflectivity, drive frequency, harmonic, ...)."""

    beta: float          # dimensionless drive strength
    theta: float         # drive phase, rad
    finesse: float       # F = -pi/ln(r)
    reflectivity: float  # intensity reflection r per mirror
    tau: float           # single-pass time L0/c, s
    nu0: float           # squeezing growth rate beta/tau, 1/s
    gamma: float         # energy damping rate pi/(F*tau), 1/s
    threshold: float     # beta_thr = pi/(2F)
    kappa: float         # dimensionless index-modulation amplitude (0 if mechanical)
    omega: float         # drive angular frequency, rad/s
    epsilon: float       # boundary modulation amplitude, m
    mean_length: float   # mean optical length L0, m
    harmonic: int        # integer m with omega = (2*m*pi*c/L0)*(1+detuning)
    detuning: float      # fractional detuning delta

    def __post_init__(self) -> None:
        for name in ("finesse", "tau", "gamma", "threshold", "mean_length"):
            if not (getattr(self, name) > 0.0):
                raise InvalidConfigError(f"derived parameter {name} must be positive")
        if self.beta < 0.0 or self.nu0 < 0.0:
            raise InvalidConfigError("derived beta and nu0 must be >= 0")


# ----------------------------------------------------------------------------
# Elementary pipeline operations


def pump_amplitude(pump: PumpConfig, crystal: CrystalConfig) -> float:
    """Intracavity pump field amplitude E0 = sqrt(P/(2*eps0*c*A*n_p)), V/m."""
    pump.validate()
    crystal.validate()
    return math.sqrt(
        pump.power / (2.0 * VACUUM_PERMITTIVITY * SPEED_OF_LIGHT * pump.area * crystal.index_p)
    )


def kappa(pump: PumpConfig, crystal: CrystalConfig) -> float:
    """Dimensionless index-modulation amplitude: kappa = E0 * chi2."""
    return pump_amplitude(pump, crystal) * crystal.chi2


def pump_wavelength(pump: PumpConfig) -> float:
    """Vacuum wavelength of the pump, 2*pi*c/Omega (m)."""
    return 2.0 * math.pi * SPEED_OF_LIGHT / pump.frequency


def check_thin_crystal(pump: PumpConfig, crystal: CrystalConfig) -> None:
    """The spatially averaged index model requires the crystal to be much
    shorter than the pump wavelength; enforce length <= 0.2 wavelength."""
    limit = THIN_CRYSTAL_MAX_FRACTION * pump_wavelength(pump)
    if crystal.length > limit:
        raise ModelValidityError(
            f"crystal length {crystal.length!r} m exceeds the thin-crystal "
            f"limit {limit!r} m (0.2 pump wavelengths); the averaged-index "
            "model is invalid for this configuration"
        )


def epsilon_opt(pump: PumpConfig, crystal: CrystalConfig) -> float:
    """Apparent length-modulation amplitude from the pumped crystal:
    epsilon = (l / (2*n_s)) * kappa, in meters."""
    check_thin_crystal(pump, crystal)
    return crystal.length / (2.0 * crystal.index_s) * kappa(pump, crystal)


def effective_index(t: float, pump: PumpConfig, crystal: CrystalConfig) -> float:
    """Spatially averaged time-dependent index n_s(t) = n_s + (eps/l) sin(Omega t - theta).

    The modulation amplitude eps/l equals kappa/(2*n_s), so
    |n_s(t) - n_s| <= kappa/(2*n_s) for all t.
    """
    check_thin_crystal(pump, crystal)
    amplitude = kappa(pump, crystal) / (2.0 * crystal.index_s)
    theta = drive_phase(pump, crystal)
    return crystal.index_s + amplitude * math.sin(pump.frequency * t - theta)


def drive_phase(pump: PumpConfig, crystal: CrystalConfig) -> float:
    """Drive phase theta = theta_p + Omega*n_p*(x0 + l/2)/c - pi/2."""
    return (
        pump.phase
        + pump.frequency * crystal.index_p * (crystal.position + crystal.length / 2.0)
        / SPEED_OF_LIGHT
        - math.pi / 2.0
    )


def mean_optical_length(cavity_geometric_length: float, crystal: CrystalConfig) -> float:
    """Mean optical length L0 = L_cav + l*(n_s - 1) for a crystal of length l
    and mean index n_s inside a cavity of geometric length L_cav."""
    return cavity_geometric_length + crystal.length * (crystal.index_s - 1.0)


def cavity_length(t: float, mean_length: float, epsilon: float, omega: float,
                  theta: float) -> float:
    """Instantaneous effective cavity length L(t) = L0 + eps*sin(Omega t - theta)."""
    return mean_length + epsilon * math.sin(omega * t - theta)


def beta_from_epsilon(epsilon: float, omega: float) -> float:
    """Dimensionless drive strength beta = epsilon*Omega/c (peak boundary
    velocity over c); valid for both mechanical and optical modulation."""
    return epsilon * omega / SPEED_OF_LIGHT


def beta_optical(pump: PumpConfig, crystal: CrystalConfig) -> float:
    """beta for the pumped-crystal drive: epsilon_opt * Omega / c."""
    return beta_from_epsilon(epsilon_opt(pump, crystal), pump.frequency)


def finesse_from_reflectivity(reflectivity: float) -> float:
    """F = -pi/ln(r); equals pi/(2*rho) for r = e^(-2*rho)."""
    if not (0.0 < reflectivity < 1.0):
        raise InvalidConfigError("reflectivity must be in (0, 1)")
    return -math.pi / math.log(reflectivity)


def reflectivity_from_finesse(finesse: float) -> float:
    """Inverse of finesse_from_reflectivity: r = e^(-pi/F)."""
    if not (finesse > 0.0):
        raise InvalidConfigError("finesse must be positive")
    return math.exp(-math.pi / finesse)


def resonant_mean_length(omega: float, harmonic: int, detuning: float = 0.0) -> float:
    """L0 such that omega = (2*m*pi*c/L0)*(1+detuning)."""
    return 2.0 * harmonic * math.pi * SPEED_OF_LIGHT * (1.0 + detuning) / omega


def resonant_omega(mean_length: float, harmonic: int, detuning: float = 0.0) -> float:
    """Drive angular frequency (2*m*pi*c/L0)*(1+detuning)."""
    return 2.0 * harmonic * math.pi * SPEED_OF_LIGHT * (1.0 + detuning) / mean_length


def _relative_difference(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


# ----------------------------------------------------------------------------
# Full derivation


def derive(config: ExperimentConfig) -> DerivedParams:
    """Fill every derived parameter from an experiment configuration.

    The identity 2*nu0 = gamma holds exactly when beta equals the threshold.
    """
    config.validate()
    cavity = config.cavity

    # Drive frequency and mean length, tied by the resonance relation.
    if config.pump is not None:
        omega = config.pump.frequency
        if cavity.mean_length is not None:
            expected = resonant_omega(cavity.mean_length, cavity.harmonic, cavity.detuning)
            if _relative_difference(omega, expected) > CONSISTENCY_RTOL:
                raise InvalidConfigError(
                    f"pump frequency {omega!r} rad/s is inconsistent with the cavity "
                    f"resonance relation, which gives {expected!r} rad/s for "
                    f"mean_length_m={cavity.mean_length!r}, harmonic={cavity.harmonic}, "
                    f"detuning={cavity.detuning!r}"
                )
            mean_length = cavity.mean_length
        else:
            mean_length = resonant_mean_length(omega, cavity.harmonic, cavity.detuning)
    else:
        mean_length = cavity.mean_length  # validated non-None for this branch
        omega = resonant_omega(mean_length, cavity.harmonic, cavity.detuning)

    # Drive strength and phase.
    if config.drive.kind == "optical":
        pump = config.pump
        crystal = config.crystal
        kappa_value = kappa(pump, crystal)
        epsilon = epsilon_opt(pump, crystal)
        beta = beta_from_epsilon(epsilon, omega)
        theta = drive_phase(pump, crystal) if config.drive.theta is None else config.drive.theta
    else:
        kappa_value = 0.0
        if config.drive.epsilon is not None:
            epsilon = config.drive.epsilon
            beta = beta_from_epsilon(epsilon, omega)
            if config.drive.beta is not None and \
                    _relative_difference(beta, config.drive.beta) > CONSISTENCY_RTOL:
                raise InvalidConfigError(
                    f"drive.beta={config.drive.beta!r} is inconsistent with "
                    f"epsilon*Omega/c={beta!r}"
                )
        else:
            beta = config.drive.beta
            epsilon = beta * SPEED_OF_LIGHT / omega
        theta = 0.0 if config.drive.theta is None else config.drive.theta

    finesse = finesse_from_reflectivity(cavity.reflectivity)
    tau = mean_length / SPEED_OF_LIGHT
    gamma = math.pi / (finesse * tau)
    nu0 = beta / tau
    threshold = math.pi / (2.0 * finesse)

    return DerivedParams(
        beta=beta,
        theta=theta,
        finesse=finesse,
        reflectivity=cavity.reflectivity,
        tau=tau,
        nu0=nu0,
        gamma=gamma,
        threshold=threshold,
        kappa=kappa_value,
        omega=omega,
        epsilon=epsilon,
        mean_length=mean_length,
        harmonic=cavity.harmonic,
        detuning=cavity.detuning,
    )


def derive_dimensionless(beta: float, finesse: float, harmonic: int = 1,
                         mean_length: float = 1e-6, theta: float = 0.0,
                         detuning: float = 0.0) -> DerivedParams:
    """Convenience constructor from the dimensionless triple (beta, F, m).

    Used by sweeps and tests that treat beta, finesse and the harmonic as the
    primary inputs; the mean length only sets absolute time scales.
    """
    if beta < 0.0:
        raise InvalidConfigError("beta must be >= 0")
    if finesse <= 0.0:
        raise InvalidConfigError("finesse must be positive")
    if harmonic < 1:
        raise InvalidConfigError("harmonic must be >= 1")
    if mean_length <= 0.0:
        raise InvalidConfigError("mean_length must be positive")
    reflectivity = reflectivity_from_finesse(finesse)
    tau = mean_length / SPEED_OF_LIGHT
    omega = resonant_omega(mean_length, harmonic, detuning)
    return DerivedParams(
        beta=beta,
        theta=theta,
        finesse=finesse,
        reflectivity=reflectivity,
        tau=tau,
        nu0=beta / tau,
        gamma=math.pi / (finesse * tau),
        threshold=math.pi / (2.0 * finesse),
        kappa=0.0,
        omega=omega,
        epsilon=beta * SPEED_OF_LIGHT / omega,
        mean_length=mean_length,
        harmonic=harmonic,
        detuning=detuning,
    )


def require_below_threshold(beta: float, finesse: float, *, where: str) -> None:
    """Shared gate for closed forms valid only far below threshold."""
    threshold = math.pi / (2.0 * finesse)
    if beta >= threshold:
        raise DomainError(
            f"{where} is only valid below the oscillation threshold "
            f"beta_thr = pi/(2F) = {threshold!r}; got beta = {beta!r}"
        )
