"""Mode comb, symplectic drive map, and the one-round-trip Gaussian channel.

Phase-space conventions:

- Quadratures are interleaved (x_1, p_1, ..., x_K, p_K); vacuum has
  covariance I/2.
- The drive couples resonant pairs (k, 2m-k) for 1 <= k <= 2m-1 (two-mode
  squeezing; single-mode squeezing at k = m), with per-reflection strength
  xi_k = 2*beta*sqrt(k*(2m-k))/m, i.e. proportional to
  sqrt(omega_k*omega_k')/Omega. This is the symplectic-compatible resonant
  pair sector of the boundary-modulation scattering; frequency-conversion
  sidebands (k -> k+2m) are deliberately excluded because a hard mode-comb
  cutoff renders them artifacts of the truncation (their coupling ladder
  terminates unphysically and the resulting dynamics depend on the cutoff
  parity rather than on the physics).
- Free propagation over one pass multiplies mode k by the exact parity
  (-1)^k (phase k*pi), composed with a rotation by -k*pi*delta when the
  drive is detuned by the fractional amount delta.

With these couplings the degenerate mode grows at amplitude rate
nu0 = beta/tau, so the oscillation threshold sits at beta_thr = pi/(2F)
where 2*nu0 = gamma exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import expm

from .constants import SPEED_OF_LIGHT, VACUUM_VARIANCE
from .errors import InvalidConfigError, NumericalInstabilityError, TruncationError
from .params import DerivedParams

SYMPLECTIC_TOL = 1e-10
CP_TOL = 1e-12
PHYSICALITY_TOL = 1e-9
SYMMETRY_TOL = 1e-12
OCCUPATION_FLOOR = -1e-9


@dataclass(frozen=True)
class ModeBasis:
    """Truncated comb of cavity modes omega_k = k*pi*c/L0, k = 1..count,
    driven at the harmonic m: pump frequency (2*m*pi*c/L0)*(1+detuning)."""

    count: int
    mean_length: float
    harmonic: int
    detuning: float = 0.0

    @classmethod
    def create(cls, count: int, mean_length: float, harmonic: int,
               detuning: float = 0.0) -> "ModeBasis":
        if harmonic < 1:
            raise InvalidConfigError("harmonic must be >= 1")
        if count < 2 * harmonic + 2:
            raise InvalidConfigError(
                f"basis size {count} too small: need count >= 2*harmonic+2 = "
                f"{2 * harmonic + 2} so every resonant pair partner is retained"
            )
        if mean_length <= 0.0:
            raise InvalidConfigError("mean_length must be positive")
        if detuning <= -1.0:
            raise InvalidConfigError("detuning must be > -1")
        return cls(count=count, mean_length=mean_length, harmonic=harmonic,
                   detuning=detuning)

    @classmethod
    def for_params(cls, derived: DerivedParams, count: Optional[int] = None) -> "ModeBasis":
        """Basis matching a parameter set; default size max(8m, 2m+6)."""
        m = derived.harmonic
        if count is None:
            count = max(8 * m, 2 * m + 6)
        return cls.create(count=count, mean_length=derived.mean_length,
                          harmonic=m, detuning=derived.detuning)

    def frequencies(self) -> np.ndarray:
        """Mode angular frequencies omega_k = k*pi*c/L0, rad/s."""
        k = np.arange(1, self.count + 1, dtype=float)
        return k * math.pi * SPEED_OF_LIGHT / self.mean_length

    def pump_frequency(self) -> float:
        return (2.0 * self.harmonic * math.pi * SPEED_OF_LIGHT / self.mean_length) \
            * (1.0 + self.detuning)


def default_basis_size(harmonic: int) -> int:
    return max(8 * harmonic, 2 * harmonic + 6)


# ----------------------------------------------------------------------------
# Symplectic structure


def symplectic_form(count: int) -> np.ndarray:
    """Canonical antisymmetric form J on interleaved (x, p) quadratures."""
    j = np.zeros((2 * count, 2 * count))
    for k in range(count):
        j[2 * k, 2 * k + 1] = 1.0
        j[2 * k + 1, 2 * k] = -1.0
    return j


@dataclass(frozen=True)
class SymplecticMap:
    """Real linear map on the quadrature vector satisfying S J S^T = J."""

    matrix: np.ndarray

    @property
    def dimension(self) -> int:
        return self.matrix.shape[0]

    def symplecticity_defect(self) -> float:
        j = symplectic_form(self.dimension // 2)
        return float(np.max(np.abs(self.matrix @ j @ self.matrix.T - j)))

    def check(self, tol: float = SYMPLECTIC_TOL) -> None:
        defect = self.symplecticity_defect()
        if not (defect < tol):
            raise NumericalInstabilityError(
                f"symplecticity defect {defect:.3e} exceeds tolerance {tol:.1e}"
            )


def _squeeze_block(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, s], [s, -c]])


def pair_coupling_strength(beta: float, k: int, harmonic: int) -> float:
    """Per-reflection squeezing strength for the resonant pair (k, 2m-k):
    xi_k = 2*beta*sqrt(k*(2m-k))/m. Reduces to 2*beta at k = m."""
    partner = 2 * harmonic - k
    return 2.0 * beta * math.sqrt(k * partner) / harmonic


def drive_generator(beta: float, theta: float, basis: ModeBasis) -> SymplecticMap:
    """Symplectic map for one reflection off the modulated boundary.

    Constructed as the exponential of the quadratic pair-creation generator,
    so the result is exactly symplectic at every beta; to first order in beta
    the matrix reproduces the resonant pair coefficient table (see
    pair_coupling_strength). Raises TruncationError if the basis is missing a
    required partner mode.
    """
    if beta < 0.0:
        raise InvalidConfigError("beta must be >= 0")
    m = basis.harmonic
    count = basis.count
    if count < 2 * m - 1:
        raise TruncationError(
            f"basis of size {count} cannot hold the resonant pairs of harmonic "
            f"{m}: partner modes up to 2m-1 = {2 * m - 1} are required"
        )
    if beta == 0.0:
        return SymplecticMap(matrix=np.eye(2 * count))

    block = _squeeze_block(theta)
    generator = np.zeros((2 * count, 2 * count))
    for k in range(1, m + 1):
        partner = 2 * m - k
        xi = pair_coupling_strength(beta, k, m)
        rows = slice(2 * (k - 1), 2 * k)
        cols = slice(2 * (partner - 1), 2 * partner)
        if k == partner:
            generator[rows, cols] += xi * block
        else:
            generator[rows, cols] += xi * block
            generator[cols, rows] += xi * block

    mapping = SymplecticMap(matrix=expm(generator))
    mapping.check()
    return mapping


def propagation_signs(basis: ModeBasis) -> np.ndarray:
    """Exact one-pass parity signs (-1)^k per mode, expanded to quadratures."""
    k = np.arange(1, basis.count + 1)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    return np.repeat(signs, 2)


def propagation_map(basis: ModeBasis) -> np.ndarray:
    """Dense one-pass propagation matrix: parity composed with the detuning
    rotation by -k*pi*delta per mode (identity rotation at delta = 0)."""
    matrix = np.diag(propagation_signs(basis))
    if basis.detuning != 0.0:
        for k in range(1, basis.count + 1):
            angle = -k * math.pi * basis.detuning
            c, s = math.cos(angle), math.sin(angle)
            rot = np.array([[c, s], [-s, c]])
            idx = slice(2 * (k - 1), 2 * k)
            matrix[idx, idx] = matrix[idx, idx] @ rot
    return matrix


# ----------------------------------------------------------------------------
# States


@dataclass
class GaussianState:
    """Gaussian state of the mode comb: zero mean, covariance V with vacuum
    variance 1/2 per quadrature."""

    covariance: np.ndarray

    @classmethod
    def vacuum(cls, count: int) -> "GaussianState":
        return cls(covariance=np.eye(2 * count) * VACUUM_VARIANCE)

    @property
    def mode_count(self) -> int:
        return self.covariance.shape[0] // 2

    def symplectic_eigenvalues(self) -> np.ndarray:
        j = symplectic_form(self.mode_count)
        eigs = np.linalg.eigvals(j @ self.covariance)
        values = np.sort(np.abs(eigs))
        # Eigenvalues of J V come in pairs +-i*nu; report each nu once.
        return values[::2]

    def check_physical(self, tol: float = PHYSICALITY_TOL) -> None:
        asym = float(np.max(np.abs(self.covariance - self.covariance.T)))
        if not (asym < SYMMETRY_TOL):
            raise NumericalInstabilityError(
                f"covariance asymmetry {asym:.3e} exceeds {SYMMETRY_TOL:.1e}"
            )
        smallest = float(np.min(self.symplectic_eigenvalues()))
        if not (smallest >= VACUUM_VARIANCE - tol):
            raise NumericalInstabilityError(
                f"state lost physicality: smallest symplectic eigenvalue "
                f"{smallest!r} < 1/2 - {tol:.1e}"
            )


def photon_numbers(state: GaussianState, basis: Optional[ModeBasis] = None) -> np.ndarray:
    """Per-mode occupations n_k = (V_xx + V_pp)/2 - 1/2, clipped to >= 0.

    Raises if an occupation falls below the -1e-9 physicality floor.
    """
    if basis is not None and basis.count != state.mode_count:
        raise InvalidConfigError(
            f"basis has {basis.count} modes but the state has {state.mode_count}"
        )
    diag = np.diag(state.covariance)
    raw = 0.5 * (diag[0::2] + diag[1::2]) - VACUUM_VARIANCE
    smallest = float(np.min(raw, initial=0.0))
    if smallest < OCCUPATION_FLOOR:
        raise NumericalInstabilityError(
            f"occupation {smallest!r} below the physical floor {OCCUPATION_FLOOR}"
        )
    return np.clip(raw, 0.0, None)


def total_photon_number(state: GaussianState) -> float:
    return float(np.sum(photon_numbers(state)))


# ----------------------------------------------------------------------------
# The one-round-trip channel


@dataclass(frozen=True)
class GaussianChannel:
    """One full round trip: propagation, modulated mirror (sqrt(r) reflection
    with the drive map, vacuum injected through the 1-r transmission),
    propagation, static mirror (sqrt(r) reflection, vacuum injection).

    ``symplectic`` is the lossless drive-and-propagation part P D P (exactly
    symplectic); ``linear_part`` is the full lossy map r * P D P whose
    complete-positivity condition against ``noise`` = (1-r^2)/2 * I is the
    channel invariant. step() applies the precomposed form; the staged form
    (used for outflux accounting) is algebraically identical.
    """

    basis: ModeBasis
    reflectivity: float
    drive: SymplecticMap
    propagation: np.ndarray
    symplectic: SymplecticMap
    linear_part: np.ndarray
    noise: np.ndarray

    def complete_positivity_margin(self) -> float:
        """Smallest eigenvalue of the symmetrized real CP test matrix
        [[N, -B], [B, N]] with B = (J - S J S^T)/2; must be >= -1e-12."""
        dim = self.linear_part.shape[0]
        j = symplectic_form(dim // 2)
        b = 0.5 * (j - self.linear_part @ j @ self.linear_part.T)
        test = np.block([[self.noise, -b], [b, self.noise]])
        return float(np.min(np.linalg.eigvalsh(test)))

    def check(self) -> None:
        self.symplectic.check()
        noise_asym = float(np.max(np.abs(self.noise - self.noise.T)))
        if not (noise_asym < SYMMETRY_TOL):
            raise NumericalInstabilityError(
                f"channel noise asymmetry {noise_asym:.3e}"
            )
        smallest_noise = float(np.min(np.linalg.eigvalsh(self.noise)))
        if not (smallest_noise >= -CP_TOL):
            raise NumericalInstabilityError(
                f"channel noise not positive semidefinite: min eigenvalue "
                f"{smallest_noise!r}"
            )
        margin = self.complete_positivity_margin()
        if not (margin >= -CP_TOL):
            raise NumericalInstabilityError(
                f"channel violates complete positivity: margin {margin!r}"
            )


def round_trip_channel(derived: DerivedParams, basis: ModeBasis) -> GaussianChannel:
    """Build and verify the one-round-trip Gaussian channel."""
    for name in ("mean_length", "harmonic", "detuning"):
        if getattr(derived, name) != getattr(basis, name):
            raise InvalidConfigError(
                f"derived parameters and basis disagree on {name}: "
                f"{getattr(derived, name)!r} vs {getattr(basis, name)!r}"
            )
    r = derived.reflectivity
    if not (0.0 < r < 1.0):
        raise InvalidConfigError("reflectivity must be in (0, 1)")

    drive = drive_generator(derived.beta, derived.theta, basis)
    prop = propagation_map(basis)
    symplectic_matrix = prop @ drive.matrix @ prop
    dim = 2 * basis.count
    channel = GaussianChannel(
        basis=basis,
        reflectivity=r,
        drive=drive,
        propagation=prop,
        symplectic=SymplecticMap(matrix=symplectic_matrix),
        linear_part=r * symplectic_matrix,
        noise=0.5 * (1.0 - r * r) * np.eye(dim),
    )
    channel.check()
    return channel


def step(state: GaussianState, channel: GaussianChannel,
         validate: bool = True) -> GaussianState:
    """Advance one round trip: V -> S V S^T + noise with S the lossy linear
    part. Symmetrized against floating-point drift."""
    s = channel.linear_part
    v = s @ state.covariance @ s.T + channel.noise
    v = 0.5 * (v + v.T)
    out = GaussianState(covariance=v)
    if validate:
        out.check_physical()
    return out


def step_with_outflux(state: GaussianState, channel: GaussianChannel) -> tuple:
    """Advance one round trip through the four stages, accumulating the
    emitted photons (1-r) * sum_k n_k at each of the two mirror encounters
    (evaluated on the field arriving at the mirror). Returns (state, emitted).
    """
    r = channel.reflectivity
    prop = channel.propagation
    d = channel.drive.matrix
    half_noise = 0.5 * (1.0 - r)

    v1 = prop @ state.covariance @ prop.T          # arriving at modulated mirror
    emitted = (1.0 - r) * total_photon_number(GaussianState(covariance=v1))
    v2 = r * (d @ v1 @ d.T)
    v2[np.diag_indices_from(v2)] += half_noise
    v3 = prop @ v2 @ prop.T                        # arriving at static mirror
    emitted += (1.0 - r) * total_photon_number(GaussianState(covariance=v3))
    v4 = r * v3
    v4[np.diag_indices_from(v4)] += half_noise
    v4 = 0.5 * (v4 + v4.T)
    return GaussianState(covariance=v4), emitted


def outflux_increment(state: GaussianState, derived: DerivedParams) -> float:
    """Photons leaking through one mirror encounter: (1-r) * sum_k n_k."""
    return (1.0 - derived.reflectivity) * total_photon_number(state)
