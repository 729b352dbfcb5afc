"""Photon generation in a length-modulated optical cavity.

Two families of predictions for the same physical system:

* closed-form models (:mod:`casimir_opo.analytic`): a stationary
  scattering-rate picture and an exponentially growing squeezing picture,
  plus the reconciliation ratio between them;
* a multimode Gaussian round-trip engine (:mod:`casimir_opo.engine`)
  that simulates the cavity field exactly within its mode truncation and
  adjudicates between the two pictures numerically.

All quantities use SI units; mode occupations are dimensionless photon
numbers per mode (vacuum variance 1/2 per quadrature).
"""

from .analytic import (
    ComparisonReport,
    model_comparison,
    n_damped,
    n_intra_scattering,
    n_out_damped,
    n_out_rate_scattering,
    n_squeezing_lossless,
    stationary_peak,
)
from .config import (
    AnalyticSettings,
    CavityConfig,
    CrystalConfig,
    DriveParams,
    ExperimentConfig,
    PumpConfig,
    RunSettings,
    SweepSettings,
    load_config,
)
from .engine import (
    RunSpec,
    SimulationResult,
    Verdict,
    default_round_trips,
    detect_stationary,
    measure_outflux_slope,
    run,
    summarize,
    sweep,
)
from .errors import (
    CasimirOpoError,
    DomainError,
    InsufficientDataError,
    InvalidConfigError,
    ModelValidityError,
    NumericalInstabilityError,
    ParseError,
    SchemaError,
    TruncationError,
)
from .modes import (
    GaussianChannel,
    GaussianState,
    ModeBasis,
    SymplecticMap,
    drive_generator,
    pair_coupling_strength,
    photon_numbers,
    round_trip_channel,
    step,
    step_with_outflux,
    total_photon_number,
)
from .params import (
    DerivedParams,
    beta_from_epsilon,
    beta_optical,
    derive,
    derive_dimensionless,
    epsilon_opt,
    finesse_from_reflectivity,
    kappa,
    pump_amplitude,
    reflectivity_from_finesse,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticSettings",
    "CasimirOpoError",
    "CavityConfig",
    "ComparisonReport",
    "CrystalConfig",
    "DerivedParams",
    "DomainError",
    "DriveParams",
    "ExperimentConfig",
    "GaussianChannel",
    "GaussianState",
    "InsufficientDataError",
    "InvalidConfigError",
    "ModeBasis",
    "ModelValidityError",
    "NumericalInstabilityError",
    "ParseError",
    "PumpConfig",
    "RunSettings",
    "RunSpec",
    "SchemaError",
    "SimulationResult",
    "SweepSettings",
    "SymplecticMap",
    "TruncationError",
    "Verdict",
    "beta_from_epsilon",
    "beta_optical",
    "default_round_trips",
    "derive",
    "derive_dimensionless",
    "detect_stationary",
    "drive_generator",
    "epsilon_opt",
    "finesse_from_reflectivity",
    "kappa",
    "load_config",
    "measure_outflux_slope",
    "model_comparison",
    "n_damped",
    "n_intra_scattering",
    "n_out_damped",
    "n_out_rate_scattering",
    "n_squeezing_lossless",
    "pair_coupling_strength",
    "photon_numbers",
    "pump_amplitude",
    "reflectivity_from_finesse",
    "round_trip_channel",
    "run",
    "stationary_peak",
    "step",
    "step_with_outflux",
    "summarize",
    "sweep",
    "total_photon_number",
    "__version__",
]
