"""Acceptance-criteria reporting.

Tests named ``test_a<N>_...`` in test_acceptance.py are grouped by criterion
number; one PASS/FAIL line per criterion is printed at the end of the run.
A criterion passes only if every one of its checks passed. Tests may attach
free-form measurement notes to their criterion via ``NOTES``.
"""

import re

ACCEPTANCE_FILE = "test_acceptance.py"

CRITERION_LABELS = {
    "A1": "derived-parameter pipeline magnitudes",
    "A2": "closed-form emission-rate magnitudes",
    "A3": "threshold and flux-balance identities",
    "A4": "damped-model peak",
    "A5": "engine vs stationary scattering model",
    "A6": "threshold dichotomy",
    "A7": "short-time universality",
    "A8": "structural invariants",
    "A9": "harmonic-number scaling (report)",
}

_CRITERION_RE = re.compile(r"::test_(a\d+)_")

# criterion -> {"passed": int, "failed": int}
_RESULTS = {}
# criterion -> free-form note string set by the tests themselves
NOTES = {}


def _criterion(nodeid):
    if ACCEPTANCE_FILE not in nodeid:
        return None
    match = _CRITERION_RE.search(nodeid)
    return match.group(1).upper() if match else None


def pytest_runtest_logreport(report):
    criterion = _criterion(report.nodeid)
    if criterion is None:
        return
    record = _RESULTS.setdefault(criterion, {"passed": 0, "failed": 0})
    if report.when == "call":
        if report.passed:
            record["passed"] += 1
        elif report.failed or report.skipped:
            record["failed"] += 1
    elif report.failed:
        # setup/teardown error: the criterion did not run cleanly
        record["failed"] += 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(_RESULTS, key=lambda c: int(c[1:])):
        record = _RESULTS[criterion]
        total = record["passed"] + record["failed"]
        status = "PASS" if record["failed"] == 0 and record["passed"] > 0 else "FAIL"
        label = CRITERION_LABELS.get(criterion, "")
        note = NOTES.get(criterion, "")
        terminalreporter.write_line(
            f"{criterion} {status}  [{record['passed']}/{total} checks] {label}{note}"
        )
