#!/usr/bin/env python3
"""The two closed-form pictures of photon generation, side by side.

Below threshold there are two simple stories about how many photons a
length-modulated cavity holds and emits:

* the scattering picture: pump photons scatter off the moving boundary at a
  constant rate, so the intracavity number sits at a fixed level and the
  emitted total grows linearly in time;
* the squeezing picture: the drive amplifies vacuum fluctuations coherently
  (n ~ sinh^2(nu0 t)), mirror loss damps them, and the product
  (nu0 t)^2 e^(-gamma t) rises quadratically, peaks at t = 2/gamma, and dies.

This script prints both curves on one time grid and their summary numbers.
Run with:

    python3 demos/02_model_comparison.py
"""

from casimir_opo import (
    derive_dimensionless,
    model_comparison,
    n_damped,
    n_intra_scattering,
    n_squeezing_lossless,
    stationary_peak,
)

BETA = 1e-4          # dimensionless drive strength
FINESSE = 1e3        # cavity finesse
HARMONIC = 1         # drive at the fundamental resonance


def main() -> None:
    derived = derive_dimensionless(BETA, FINESSE, HARMONIC)
    print(f"beta = {BETA:.1e}, F = {FINESSE:.0e}, m = {HARMONIC}")
    print(f"threshold pi/(2F) = {derived.threshold:.4e}"
          f"  (beta/threshold = {BETA / derived.threshold:.3f})")
    print(f"nu0 = {derived.nu0:.4e} 1/s, gamma = {derived.gamma:.4e} 1/s")
    print()

    level = n_intra_scattering(BETA, FINESSE, HARMONIC)
    t_peak, n_peak = stationary_peak(derived.nu0, derived.gamma)
    print("scattering picture: constant intracavity level")
    print(f"  n = (2m/3) beta^2 (F/pi)^2 = {level:.4e}")
    print("squeezing picture: transient peak, then decay")
    print(f"  peak n = e^-2 (beta F/pi)^2 = {n_peak:.4e} at t = 2/gamma"
          f" = {t_peak:.4e} s")
    print("  (the sinh^2 curve tabulated below tops out at exactly 4x this")
    print("  closed form - a fixed amplitude-convention factor that cancels")
    print("  in every ratio)")
    print()

    print("   gamma*t   n_squeeze_lossless   n_damped      n_scattering")
    for gamma_t in (0.0, 0.5, 1.0, 2.0, 4.0, 8.0):
        t = gamma_t / derived.gamma
        lossless = n_squeezing_lossless(t, derived.nu0)
        damped = n_damped(t, derived.nu0, derived.gamma)
        print(f"  {gamma_t:8.1f}   {lossless:16.4e}   {damped:.4e}    {level:.4e}")
    print()

    report = model_comparison(BETA, FINESSE, HARMONIC, derived.omega)
    print("reconciliation ratio (scattering level / damped peak):")
    print(f"  measured  {report.ratio_scattering_over_peak:.6f}")
    print(f"  predicted {report.reconciliation_ratio_predicted:.6f}"
          "   [exact closed form (2m/3) e^2]")
    print("Both pictures scale as beta^2 (F/pi)^2; they disagree only by this")
    print("constant. The round-trip engine (demo 03) decides which constant")
    print("the actual Gaussian dynamics produce.")


if __name__ == "__main__":
    main()
