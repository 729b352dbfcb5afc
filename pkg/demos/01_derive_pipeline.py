#!/usr/bin/env python3
"""From laboratory knobs to dimensionless drive strength.

Walks the derived-parameter chain for a pumped-crystal cavity, one step at a
time, and compares the result against the oscillation threshold. Run with:

    python3 demos/01_derive_pipeline.py
"""

import math

from casimir_opo import (
    CavityConfig,
    CrystalConfig,
    PumpConfig,
    beta_from_epsilon,
    derive_dimensionless,
    epsilon_opt,
    finesse_from_reflectivity,
    kappa,
    pump_amplitude,
)

# A strong continuous pump focused tightly onto a very thin chi^(2) crystal.
# PumpConfig takes the *angular* frequency; file configs take plain Hz and
# the CLI converts once at the boundary.
OMEGA = 2.0 * math.pi * 3.0e14  # rad/s  (pump at 300 THz)
pump = PumpConfig(power=1.0, frequency=OMEGA, area=1e-10)
crystal = CrystalConfig(length=1e-7, chi2=1e-11)
cavity = CavityConfig(reflectivity=0.9996858900774958, harmonic=1)


def main() -> None:
    print("Step 1 - pump field amplitude inside the crystal")
    e0 = pump_amplitude(pump, crystal)
    print(f"  E0 = sqrt(P / (2 eps0 c A n_p)) = {e0:.4e} V/m")

    print("Step 2 - index modulation amplitude")
    k = kappa(pump, crystal)
    print(f"  kappa = E0 * chi2 = {k:.4e}  (dimensionless)")

    print("Step 3 - apparent mirror displacement")
    eps = epsilon_opt(pump, crystal)
    print(f"  epsilon = (l / 2 n_s) * kappa = {eps:.4e} m")
    print("  The oscillating refractive index changes the optical path length")
    print("  exactly as if one mirror moved by epsilon.")

    print("Step 4 - dimensionless drive strength")
    beta = beta_from_epsilon(eps, OMEGA)
    print(f"  beta = epsilon * Omega / c = {beta:.4e}")
    print("  beta is the peak boundary velocity in units of c; photon")
    print("  production from vacuum needs beta > 0 and scales as beta^2.")

    print("Step 5 - compare with the cavity's threshold")
    finesse = finesse_from_reflectivity(cavity.reflectivity)
    # Resonance pins the cavity length to the drive: Omega = 2*pi*c*m/L0.
    mean_length = 2.0 * math.pi * 299792458.0 * cavity.harmonic / OMEGA
    derived = derive_dimensionless(
        beta, finesse, cavity.harmonic, mean_length=mean_length
    )
    print(f"  finesse    F       = {finesse:.4e}")
    print(f"  threshold  pi/(2F) = {derived.threshold:.4e}")
    print(f"  beta / threshold   = {beta / derived.threshold:.3f}")
    print(f"  squeezing rate nu0 = {derived.nu0:.4e} 1/s")
    print(f"  damping rate gamma = {derived.gamma:.4e} 1/s")
    if beta > derived.threshold:
        print("  -> above threshold: gain beats loss, occupation grows")
        print(f"     exponentially at 2*nu0 - gamma = {2*derived.nu0 - derived.gamma:.4e} 1/s.")
    else:
        print("  -> below threshold: loss wins and the occupation settles")
        print("     at a small stationary value.")


if __name__ == "__main__":
    main()
