"""Acceptance criteria 1-9, one test each; every test records a pass/fail line."""

from __future__ import annotations

import json
import time

import pytest

from ringlat import catalog
from ringlat.harness import FAIL, UNCONFIRMED, check_instance, jacobson_construction, run_harness
from ringlat.lattice import atoms, enumerate_interval, is_geometric, length
from ringlat.pointwise import (
    CO_PW,
    PW_EXTENSION,
    jacobson_square_check,
    length_dimension_check,
)
from ringlat.report import analyze, compare_expected
from ringlat.ringstruct import crucial_report, radical_in

from acceptance_log import record

SEED, COUNT = 42, 500
RF_BUDGET = 20

# exactly the facts each catalog item must reproduce
CATALOG_CLAIMS = {
    "ex1(m=2)": {"pw": True, "pair": False, "case": "(a)"},
    "ex2(m=3)": {"pair": True, "co_pw": False},
    "ex2(m=2)": {"co_pw": True},
    "split(n=3,q=2)": {"pair": True, "co_pw": True, "case": "(b)"},
    "split(n=4,q=2)": {"pw": True, "pair": False},
    "split(n=3,q=3)": {"pw": False},
    "ff(q=2,e=2)": {"minimal_type": "Inert"},
    "ex5": {"pw": True, "pair": False, "case": "(d)", "step_types": {"x": "Ramified", "y": "Inert"}},
    "remark7151": {"pw": False},
    "ex3-two-var": {"co_pw": True},
}


@pytest.fixture(scope="module")
def catalog_runs():
    runs = {}
    for name in CATALOG_CLAIMS:
        e = catalog.get(name)
        budget = 1000 if e.S.field.is_finite else RF_BUDGET
        t0 = time.perf_counter()
        rep = analyze(e.R, e.top, e.name, budget=budget)
        cmp = compare_expected(e, rep)
        runs[name] = (e, rep, cmp, time.perf_counter() - t0)
    return runs


@pytest.fixture(scope="module")
def suite3():
    return run_harness(SEED, COUNT, threads=1)


@pytest.fixture(scope="module")
def enumerable_checks(catalog_runs):
    """Harness checks on the finite-field catalog items and the lattice instances."""
    out = {}
    for name, (e, _, _, _) in catalog_runs.items():
        if e.S.field.is_finite:
            out[name] = check_instance(e.R, e.top, name)
    for name in ("split(n=3,q=2)", "split(n=4,q=2)"):
        e = catalog.get(name)
        out.setdefault(name, check_instance(e.R, e.top, name))
    return out


def _tally(summary, check, extra=()):
    t = dict(summary.tallies[check])
    for res in extra:
        outcome = res.outcomes.get(check)
        if outcome:
            t[outcome] = t.get(outcome, 0) + 1
    return t


def test_criterion_1_catalog(catalog_runs):
    problems = []
    for name, claims in CATALOG_CLAIMS.items():
        e, rep, cmp, secs = catalog_runs[name]
        for key, want in claims.items():
            got = cmp[key][1] if key in cmp else None
            if got != want:
                problems.append(f"{name}.{key}: {got} != {want}")
        if secs >= 1.0:
            problems.append(f"{name} took {secs:.2f}s")
    # remark7151: the characterization says no and the sampled scan finds a witness
    pw = catalog_runs["remark7151"][1].body["pointwise"][PW_EXTENSION]
    if not (pw["by_characterization"]["value"] is False and pw["by_definition"]["value"] is False
            and "witness" in pw["by_definition"]):
        problems.append("remark7151: sampled definition found no witness")
    # ex3-two-var: the co-pointwise verdict comes from the radicial degree-p² clause
    copw = catalog_runs["ex3-two-var"][1].body["pointwise"][CO_PW]["by_characterization"]
    if "clause (3)" not in copw["clause"]:
        problems.append(f"ex3-two-var decided by {copw['clause']!r}")
    slowest = max(r[3] for r in catalog_runs.values())
    record(1, not problems, f"{len(CATALOG_CLAIMS)} catalog items, slowest {slowest:.2f}s"
           + (f"; {problems}" if problems else ""))
    assert not problems


def test_criterion_2_lattices():
    want = {3: (5, 2, True, 3), 4: (15, 3, False, None)}
    parts, ok = [], True
    for n, (nodes, ell, geo, n_atoms) in want.items():
        e = catalog.get(f"split(n={n},q=2)")
        t0 = time.perf_counter()
        L = enumerate_interval(e.R, e.top)
        got = (L.node_count, length(L), is_geometric(L)[0], len(atoms(L)))
        secs = time.perf_counter() - t0
        ok &= got[:3] == (nodes, ell, geo) and (n_atoms is None or got[3] == n_atoms) and secs < 1.0
        parts.append(f"[F_2, F_2^{n}] nodes {got[0]}, atoms {got[3]}, length {got[1]}, "
                     f"geometric {got[2]}, {secs:.2f}s")
    record(2, ok, "; ".join(parts))
    assert ok


def test_criterion_3_dual_oracles(suite3):
    checks = ("dual-oracle-pw", "dual-oracle-pair", "dual-oracle-co-pw", "minimal-type-vs-oracle")
    fails = {c: suite3.tallies[c][FAIL] for c in checks}
    certified = {c: suite3.tallies[c]["pass"] for c in checks}
    unconfirmed = sum(suite3.tallies[c][UNCONFIRMED] for c in checks)
    ok = not any(fails.values()) and suite3.seconds < 300
    record(3, ok, f"{COUNT} instances in {suite3.seconds:.0f}s, disagreements {sum(fails.values())}, "
                  f"certified {certified}, unconfirmed {unconfirmed}")
    assert ok


def test_criterion_4_length_formulas(suite3, enumerable_checks):
    t = _tally(suite3, "length-dimension", enumerable_checks.values())
    rf = []
    for name in ("ex5", "ex3-two-var"):
        e = catalog.get(name)
        rep = length_dimension_check(e.R, e.top)
        rf.append(rep.holds)
    ok = t.get(FAIL, 0) == 0 and all(rf) and t.get("pass", 0) > 0
    record(4, ok, f"length formulas: {t.get('pass', 0) + sum(rf)} pass, {t.get(FAIL, 0)} fail")
    assert ok


def test_criterion_5_co_pointwise_equivalence(suite3, enumerable_checks):
    t = _tally(suite3, "co-pw-length-two", enumerable_checks.values())
    ok = t.get(FAIL, 0) == 0 and t.get(UNCONFIRMED, 0) == 0
    record(5, ok, f"co-pw ⟺ pair ∧ length 2 ⟺ pair ∧ two generators: {t.get('pass', 0)} pass, {t.get(FAIL, 0)} fail")
    assert ok


def test_criterion_6_structural_laws(suite3, enumerable_checks):
    names = ("crucial-ideal", "hereditary", "jacobson-square")
    tallies = {n: _tally(suite3, n, enumerable_checks.values()) for n in names}
    rf_ok = True
    for name in ("ex5", "ex3-two-var"):
        e = catalog.get(name)
        cr = crucial_report(e.R, e.top)
        rf_ok &= len(cr.msupp) == 1 and cr.crucial.space == radical_in(e.R, cr.conductor).space
        rf_ok &= jacobson_square_check(e.R, e.top)
    built = [jacobson_construction(SEED, i) for i in range(50)]
    jac_ok = sum(b is not None and b[0].by_characterization.value is True
                 and b[0].by_definition.value is not False for b in built)
    ok = all(t.get(FAIL, 0) == 0 for t in tallies.values()) and rf_ok and jac_ok == 50
    summary = ", ".join(f"{n} {t.get('pass', 0)}/{t.get(FAIL, 0)}" for n, t in tallies.items())
    record(6, ok, f"pass/fail: {summary}; jacobson constructions {jac_ok}/50 pointwise minimal")
    assert ok


def test_criterion_7_tower_profiles(suite3):
    t = suite3.tallies["tower-profiles"]
    ok = t[FAIL] == 0 and t["pass"] > 0
    record(7, ok, f"every maximal chain of lattices with ≤ 50 nodes: {t['pass']} pass, {t[FAIL]} fail, {t['n/a']} n/a")
    assert ok


def test_criterion_8_spanning_independent_atoms(suite3, enumerable_checks):
    t = _tally(suite3, "spanning-independent-atoms", enumerable_checks.values())
    ok = t.get(FAIL, 0) == 0 and t.get("pass", 0) > 0
    record(8, ok, f"|I| = length on pointwise minimal pairs: {t.get('pass', 0)} pass, {t.get(FAIL, 0)} fail")
    assert ok


def test_criterion_9_determinism(suite3, catalog_runs):
    again = run_harness(SEED, COUNT, threads=2)
    same_harness = json.dumps(again.to_json()) == json.dumps(suite3.to_json())
    same_reports = True
    for name, (e, rep, _, _) in catalog_runs.items():
        budget = 1000 if e.S.field.is_finite else RF_BUDGET
        rerun = analyze(e.R, e.top, e.name, budget=budget)
        same_reports &= json.dumps(rerun.to_json()) == json.dumps(rep.to_json())
    ok = same_harness and same_reports
    record(9, ok, f"harness summary identical across 1 and 2 workers: {same_harness}; "
                  f"catalog reports identical on rerun: {same_reports}")
    assert ok
