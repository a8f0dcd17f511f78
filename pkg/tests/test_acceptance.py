"""Acceptance criteria at full size.

Runs ``tetrablock verify --suite all --seed 42 --no-timestamp`` twice in
subprocesses, then checks each criterion against the JSON report at its
stated sample sizes and tolerances.  Each criterion prints one PASS/FAIL line.
Budget: about five minutes on one core.
"""

import json
import re
import subprocess
import sys

import pytest

pytestmark = pytest.mark.acceptance

CMD = [sys.executable, "-m", "tetrablock", "verify", "--suite", "all", "--seed", "42", "--no-timestamp"]


@pytest.fixture(scope="module")
def runs():
    out = []
    for _ in range(2):
        proc = subprocess.run(CMD, capture_output=True, text=True, check=False, timeout=1800)
        out.append(proc)
    return out


@pytest.fixture(scope="module")
def report(runs):
    return json.loads(runs[0].stdout)


@pytest.fixture(scope="module")
def elapsed(runs):
    found = re.findall(r"^(\w+): (PASS|FAIL) \(([\d.]+) s\)$", runs[0].stderr, flags=re.M)
    return {name: float(t) for name, _, t in found}


def _checks(report, suite):
    (s,) = [s for s in report["suites"] if s["suite"] == suite]
    return {c["name"]: c for c in s["checks"]}


def _report_line(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\ncriterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_verify_exit_status(runs, capsys):
    assert runs[0].returncode == 0, runs[0].stderr


def test_criterion_01_membership_criteria(report, elapsed, capsys):
    c = _checks(report, "lemma1")["criteria_agree"]
    t = elapsed["lemma1"]
    ok = (c["passed"] and c["exceptions"] == 0 and c["points"] >= 10_000 and c["phases"] == 3600
          and c["disc_samples"] == 1000 and t <= 60)
    _report_line(capsys, 1, ok, f"exceptions={c['exceptions']} on {c['points']} points, {t:.1f} s (<= 60 s)")


def test_criterion_02_extremal_identity(report, capsys):
    checks = _checks(report, "lemma1")
    ident, grid = checks["extremal_identity"], checks["grid_below_extremal"]
    ok = (ident["max_abs_error"] <= 1e-12 and grid["max_excess"] <= 1e-9
          and ident["points"] >= 10_000 and grid["points"] >= 10_000)
    _report_line(capsys, 2, ok, f"identity error {ident['max_abs_error']:.2e} (<= 1e-12), "
                 f"grid excess {grid['max_excess']:.2e} (<= 1e-9)")


def test_criterion_03_preimages(report, elapsed, capsys):
    checks = _checks(report, "prop31")
    pre = [checks[f"preimage_rho_{r}"] for r in ("0.1", "0.5", "0.9", "1")]
    t = elapsed["prop31"]
    worst = max(c["max_roundtrip"] for c in pre)
    ok = all(c["failures"] == 0 and c["points"] >= 10_000 for c in pre) and worst <= 1e-12 and t <= 30
    _report_line(capsys, 3, ok, f"failures={sum(c['failures'] for c in pre)}, "
                 f"max round-trip {worst:.2e} (<= 1e-12), {t:.1f} s (<= 30 s)")


def test_criterion_04_closed_form_vs_oracle(report, capsys):
    checks = _checks(report, "prop31")
    cf = [checks[f"closed_form_rho_{r}"] for r in ("0.25", "0.5", "0.75")]
    ok = all(c["disagreements"] == 0 and c["points"] >= 10_000 for c in cf)
    _report_line(capsys, 4, ok, f"disagreements={[c['disagreements'] for c in cf]} on 3 x {cf[0]['points']} points")


def test_criterion_05_separating_hyperplanes(report, capsys):
    c = _checks(report, "lemma2")["separating_hyperplanes"]
    ok = c["failures"] == 0 and c["points"] >= 1000 and c["miss_samples"] >= 100_000 and c["max_residual"] <= 1e-12
    _report_line(capsys, 5, ok, f"failures={c['failures']} on {c['points']} points, "
                 f"max residual {c['max_residual']:.2e} (<= 1e-12)")


def test_criterion_06_one_r_r_family(report, capsys):
    checks = _checks(report, "thm1")
    fams = [checks[f"members_miss_r_{r}"] for r in ("0", "0.3", "0.7")]
    non = [checks[f"non_members_hit_r_{r}"] for r in ("0", "0.3", "0.7")]
    ok = (all(c["missing"] == c["members"] >= 200 for c in fams)
          and all(c["hitting"] == c["non_members"] >= 200 for c in non))
    _report_line(capsys, 6, ok, f"members missing {[c['missing'] for c in fams]}, "
                 f"non-members hitting {[c['hitting'] for c in non]}")


def test_criterion_07_planar_supporting_sets(report, capsys):
    checks = _checks(report, "thm2")
    b1, b2 = checks["singleton_bullet_1"], checks["singleton_bullet_2"]
    mid = checks["corner_midpoint_convexity"]
    ok = (b1["confirmed"] == b1["points"] >= 100 and b2["confirmed"] == b2["points"] >= 100
          and b1["perturbed"] >= 50 and checks["corner_contains_zero"]["passed"]
          and mid["failures"] == 0 and mid["pairs"] >= 1000 and checks["corner_rejects_witness"]["passed"])
    _report_line(capsys, 7, ok, f"bullets {b1['confirmed']}/{b1['points']}, {b2['confirmed']}/{b2['points']}; "
                 f"midpoint failures {mid['failures']}/{mid['pairs']}; witness rejected "
                 f"{checks['corner_rejects_witness']['passed']}")


def test_criterion_08_scans(report, elapsed, capsys):
    checks = _checks(report, "corollary")
    # G_{2,1} is reported under its own name G2
    names = ["scan_E"] + [f"scan_G2RHO({r})" for r in ("0.25", "0.5", "0.75")] + ["scan_G2"]
    scans = [checks[n] for n in names]
    control = checks["scan_control_fails"]
    t = elapsed["corollary"]
    ok = (all(c["violations"] == 0 and c["lines"] >= 10_000 and c["resolution"] == 256 for c in scans)
          and control["violations"] >= 1 and control["lines"] <= 1000 and t <= 600)
    _report_line(capsys, 8, ok, f"violations {[c['violations'] for c in scans]}, "
                 f"control {control['violations']} in {control['lines']} lines, {t:.1f} s (<= 600 s)")


def test_criterion_09_tangent_gradient(report, capsys):
    c = _checks(report, "thm1")["tangent_gradient"]
    ok = c["max_relative_error"] <= 1e-6 and c["points"] >= 100 and c["step"] == 1e-6
    _report_line(capsys, 9, ok, f"max relative error {c['max_relative_error']:.2e} (<= 1e-6) on {c['points']} points")


def test_criterion_10_determinism(runs, capsys):
    a, b = runs[0].stdout, runs[1].stdout
    ok = a == b and len(a) > 0 and "timestamp" not in a
    _report_line(capsys, 10, ok, f"two runs byte-identical: {a == b} ({len(a)} bytes)")
