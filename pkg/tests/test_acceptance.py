"""Acceptance criteria, one test each.

Every test prints a single ``ACCEPTANCE <n> PASS|FAIL: ...`` line; the
lines are also repeated in the pytest terminal summary (see conftest.py).
Run this file directly to print just those lines.
"""

import json
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

from dend.algebra import check_axioms, sum_associativity_check
from dend.catalog import FamilyClaim, default_catalog
from dend.groebner import Ideal, buchberger, ideal_member, radical_member, solve_components
from dend.operators import (
    AVERAGING_KIND,
    NIJENHUIS_KIND,
    REYNOLDS_KIND,
    ROW,
    STANDARD,
    build_system,
    rota_baxter,
)
from dend.poly import LEX, VarTable
from dend.verify import CONDITIONAL, CONFIRMED, verify_claim, weight_shift_check

CATALOG = default_catalog()
KINDS = [rota_baxter(0), rota_baxter(1), REYNOLDS_KIND, NIJENHUIS_KIND, AVERAGING_KIND]
RESULTS = {}


def record(n, ok, detail):
    line = f"ACCEPTANCE {n} {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def constant_claim(alg, kind, matrix):
    table = VarTable(list(alg.table.names))
    rows = tuple(tuple(table.const(x) for x in row) for row in matrix)
    return FamilyClaim("const", alg.id, kind, (), rows, (), "acceptance", table)


@pytest.fixture(scope="module")
def sweeps(tmp_path_factory):
    """Two full CLI sweeps in fresh directories, timed."""
    runs = []
    env = dict(os.environ)
    for k in range(2):
        cwd = tmp_path_factory.mktemp(f"sweep{k}")
        start = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "dend.cli", "verify", "--all", "--conventions", "both",
             "--rb-tail", "both", "--seed", "42"],
            cwd=cwd, env=env, capture_output=True, text=True)
        runs.append((proc, time.perf_counter() - start, cwd / "report" / "report.json"))
    return runs


def test_1_axiom_suite():
    start = time.perf_counter()
    violations = {a.id: check_axioms(a) for a in CATALOG.algebras}
    elapsed = time.perf_counter() - start
    checked = sum(a.dim ** 3 * 3 for a in CATALOG.algebras)
    ok = len(violations) == 12 and not any(violations.values()) and checked == 12 * 24 and elapsed < 1
    record(1, ok, f"{len(violations)} algebras, {checked} identity residuals, "
                  f"{sum(map(len, violations.values()))} violations, {elapsed:.3f}s")


def test_2_split_associativity():
    bad = {a.id: sum_associativity_check(a) for a in CATALOG.algebras}
    ok = len(bad) == 12 and not any(bad.values())
    record(2, ok, f"associativity of the sum product holds on {len(bad)} algebras")


def test_3_theorem_reproduction():
    alg = CATALOG.algebra("Dend2_1")
    system = build_system(alg, rota_baxter(0), ROW)
    comps = solve_components(system.polynomials, system.unknowns, system.parameters)
    t = system.table
    shape_ok = (len(comps) == 1
                and comps[0].substitutions == {"a11": t.zero(), "a21": t.zero(), "a22": t.zero()}
                and comps[0].free == ["a12"] and not comps[0].residuals and not comps[0].inequations)
    (p1,) = [c for c in CATALOG.claims if c.id == "rb0-Dend2_1-P1"]
    verdict = verify_claim(p1, alg, ROW)
    ok = shape_ok and verdict.status == CONFIRMED
    record(3, ok, f"components: {[c.describe() for c in comps]}; P1 {verdict.status}")


def test_4_trivial_operators():
    zero, ident = ((0, 0), (0, 0)), ((1, 0), (0, 1))
    failures = []
    cases = 0
    for alg in CATALOG.algebras:
        for kind in KINDS:
            cases += 1
            if verify_claim(constant_claim(alg, kind, zero), alg, ROW, STANDARD).status != CONFIRMED:
                failures.append(f"zero {alg.id} {kind}")
        for kind in (NIJENHUIS_KIND, REYNOLDS_KIND, AVERAGING_KIND, rota_baxter(-1)):
            cases += 1
            if verify_claim(constant_claim(alg, kind, ident), alg, ROW, STANDARD).status != CONFIRMED:
                failures.append(f"identity {alg.id} {kind}")
        for w in (0, 1):
            cases += 1
            if verify_claim(constant_claim(alg, rota_baxter(w), ident), alg, ROW, STANDARD).status == CONFIRMED:
                failures.append(f"identity {alg.id} weight {w} unexpectedly confirmed")
    record(4, not failures, f"{cases} cases, failures: {failures or 'none'}")


def test_5_dual_engine_agreement(sweeps):
    proc, _, path = sweeps[0]
    doc = json.loads(path.read_text())
    verdicts = doc["verdicts"]
    expected = sum(2 * (2 if c.kind.uses_tail else 1) for c in CATALOG.claims)
    disagreements = [d for v in verdicts for d in v["dual_engine"]["disagreements"]]
    all_points = all(v["dual_engine"]["points"] + v["dual_engine"]["skipped"] == 200 for v in verdicts)
    ok = proc.returncode == 0 and len(verdicts) == expected and all_points and not disagreements
    record(5, ok, f"{len(verdicts)} verdicts x 200 points (seed 42), {len(disagreements)} disagreements")


def test_6_groebner_oracles():
    x = VarTable(["x", "y"])
    X, Y = x.var("x"), x.var("y")
    gb = buchberger(Ideal([X ** 2 - 1, X * Y - 1], LEX))
    basis_ok = [str(g) for g in gb.basis] == ["x - y", "y^2 - 1"]
    system = build_system(CATALOG.algebra("Dend2_1"), rota_baxter(0), ROW)
    ideal = Ideal([p for p in system.polynomials if p])
    a11 = system.table.var("a11")
    member = ideal_member(a11, buchberger(ideal))
    radical = radical_member(a11, ideal)
    ok = basis_ok and not member and radical
    record(6, ok, f"basis {[str(g) for g in gb.basis]}; a11 in I: {member}; a11 in rad I: {radical}")


def test_7_weight_shift_audit(sweeps):
    alg = CATALOG.algebra("Dend2_1")
    (p1,) = [c for c in CATALOG.claims if c.id == "rb0-Dend2_1-P1"]
    family = p1.renamed({"a12": "t"})
    verdict = weight_shift_check(family, alg, 1, ROW, STANDARD)
    direct = verdict.status == CONDITIONAL and [str(c) for c in verdict.conditions] == ["t"]
    doc = json.loads(sweeps[0][2].read_text())
    logged = [w for w in doc["weight_shift"] if w["claim"] == "rb0-Dend2_1-P1"
              and w["convention"] == ROW and w["rb_tail"] == STANDARD]
    in_report = len(logged) == 1 and logged[0]["verdict"] == CONDITIONAL and logged[0]["conditions"] == ["a12"]
    record(7, direct and in_report, f"target weight 1: {verdict}; recorded in report: {in_report}")


def test_8_determinism_and_scale(sweeps):
    (p1, t1, r1), (p2, t2, r2) = sweeps
    same = r1.exists() and r2.exists() and r1.read_bytes() == r2.read_bytes()
    ok = p1.returncode == 0 and p2.returncode == 0 and same and t1 < 60 and t2 < 60
    record(8, ok, f"runs took {t1:.1f}s and {t2:.1f}s; report.json byte-identical: {same}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s", "-p", "no:cacheprovider"]))
