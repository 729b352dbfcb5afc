#!/usr/bin/env python3
"""Engine verdicts across the oscillation threshold.

The round-trip engine propagates the exact Gaussian state of the cavity
modes trip by trip. Below beta_thr = pi/(2F) the per-trip squeezing gain
loses to the mirror loss and the occupation settles; above it the gain wins
and the occupation grows exponentially at 2*nu0 - gamma. This script runs
the engine on both sides of the threshold and prints its classification
next to the closed-form expectations. Run with:

    python3 demos/03_threshold_dichotomy.py
"""

from casimir_opo import ModeBasis, RunSpec, derive_dimensionless, run

FINESSE = 100.0
HARMONIC = 1
FACTORS = (0.25, 0.5, 0.9, 1.5, 2.0)  # beta as a multiple of the threshold


def main() -> None:
    threshold = 3.141592653589793 / (2.0 * FINESSE)
    print(f"F = {FINESSE:.0f}, m = {HARMONIC}, threshold = {threshold:.6e}")
    print()
    print("  beta/thr  verdict      level or log-slope        2*nu0 - gamma")
    for factor in FACTORS:
        derived = derive_dimensionless(factor * threshold, FINESSE, HARMONIC)
        spec = RunSpec(
            derived=derived,
            basis=ModeBasis.for_params(derived),
            max_round_trips=3000,
            record_every=1,
        )
        result = run(spec)
        verdict = result.verdict
        rate = 2.0 * derived.nu0 - derived.gamma
        if verdict.kind == "stationary":
            shown = f"level     = {verdict.level:.6e}"
        else:
            shown = f"log-slope = {verdict.log_slope:+.6e}"
        print(f"  {factor:8.2f}  {verdict.kind:<11s}  {shown}  {rate:+.6e}")
    print()
    print("Below threshold 2*nu0 - gamma < 0: the fit window shows a flat")
    print("level. Above threshold the measured log-slope matches 2*nu0 -")
    print("gamma; at 2x threshold the match is exact to machine precision.")


if __name__ == "__main__":
    main()
