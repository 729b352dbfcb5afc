"""Shared fixtures: real simulator artifacts, produced once per session.

The figure package consumes files, so its tests exercise it against files
the simulator CLI actually wrote. The CLI is always run as a subprocess —
the figure package itself must never import the simulator, and the tests
verify that separation too.
"""

import json
import math
import subprocess
import sys

import pytest

FINESSE = 100.0
REFLECTIVITY = math.exp(-math.pi / FINESSE)
THRESHOLD = math.pi / (2.0 * FINESSE)


def run_cli(command: str, config_path, out_dir) -> None:
    result = subprocess.run(
        [sys.executable, "-m", "casimir_opo", command,
         "--config", str(config_path), "--out-dir", str(out_dir)],
        capture_output=True, text=True, check=False,
    )
    assert result.returncode == 0, f"casimir-opo {command} failed:\n{result.stderr}"


def mechanical_config(beta: float, harmonic: int = 1, **sections) -> dict:
    config = {
        "cavity": {
            "reflectivity": REFLECTIVITY,
            "harmonic": harmonic,
            "mean_length_m": 1e-6,
        },
        "drive": {"kind": "mechanical", "beta": beta},
    }
    config.update(sections)
    return config


def write_config(directory, name: str, config: dict):
    path = directory / name
    path.write_text(json.dumps(config), encoding="utf-8")
    return path


@pytest.fixture(scope="session")
def artifacts(tmp_path_factory):
    """One directory holding every simulator artifact the tests consume."""
    root = tmp_path_factory.mktemp("artifacts")

    # Rise-and-decay curves: far below threshold so the closed-form peak
    # sits essentially at gamma*t = 2 on the default 0.01-step grid.
    for tag, factor in (("a", 0.05), ("b", 0.02)):
        out = root / f"fig2_{tag}"
        out.mkdir()
        config = write_config(
            root, f"fig2_{tag}.json",
            mechanical_config(factor * THRESHOLD,
                              analytic={"t_max_over_gamma": 10.0, "points": 1001}),
        )
        run_cli("derive", config, out)
        run_cli("analytic", config, out)

    # Overlay: one short below-threshold run plus its closed-form curves.
    overlay = root / "overlay"
    overlay.mkdir()
    config = write_config(
        root, "overlay.json",
        mechanical_config(0.1 * THRESHOLD,
                          run={"max_round_trips": 2000, "record_every": 1},
                          analytic={"t_max_over_gamma": 10.0, "points": 1001}),
    )
    run_cli("simulate", config, overlay)
    run_cli("analytic", config, overlay)

    # Spectra: a resonantly driven second-harmonic run and a vacuum run.
    resonant = root / "spectrum_resonant"
    resonant.mkdir()
    config = write_config(
        root, "spectrum_resonant.json",
        mechanical_config(0.1 * THRESHOLD, harmonic=2,
                          run={"max_round_trips": 2000, "record_every": 1}),
    )
    run_cli("simulate", config, resonant)

    vacuum = root / "spectrum_vacuum"
    vacuum.mkdir()
    config = write_config(
        root, "spectrum_vacuum.json",
        mechanical_config(0.0, run={"max_round_trips": 50, "record_every": 1}),
    )
    run_cli("simulate", config, vacuum)

    # Threshold map: a 2x2 sweep straddling the threshold at both finesses.
    sweep = root / "sweep"
    sweep.mkdir()
    config = write_config(
        root, "sweep.json",
        mechanical_config(0.5 * THRESHOLD,
                          run={"max_round_trips": 1500, "record_every": 1},
                          sweep={"beta": [0.01, 0.05], "finesse": [50.0, 100.0]}),
    )
    run_cli("sweep", config, sweep)

    return root
