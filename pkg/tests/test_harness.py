from __future__ import annotations

import json

import pytest

from ringlat.harness import (
    CHECKS,
    FAIL,
    Profile,
    check_instance,
    jacobson_construction,
    parse_profile,
    random_instance,
    run_harness,
)


def test_random_instances_are_deterministic_and_within_bounds():
    prof = Profile((2,), 4)
    for i in range(30):
        a, b = random_instance(5, i, prof), random_instance(5, i, prof)
        assert json.dumps(a.to_json()) == json.dumps(b.to_json())
        assert a.S.dim <= 4 and a.S.field.p == 2
        assert a.R.dim < a.S.dim and a.R.contains(a.S.unit)


def test_profile_parsing():
    assert parse_profile("wide") == Profile((2, 3, 5), 8)
    assert parse_profile("p=2;dim=4") == Profile((2,), 4)
    with pytest.raises(ValueError):
        parse_profile("p=7")
    with pytest.raises(ValueError):
        parse_profile("q=2")


def test_small_run_has_no_failures():
    s = run_harness(11, 40)
    assert s.failed == 0, s.counterexamples[:3]
    assert set(CHECKS) <= set(s.tallies)
    assert sum(s.tallies["dual-oracle-pw"].values()) == 40


def test_summary_independent_of_thread_count():
    a = run_harness(3, 12, threads=1).to_json()
    b = run_harness(3, 12, threads=3).to_json()
    assert a == b


def test_empty_run():
    s = run_harness(0, 0)
    assert s.failed == 0 and s.count == 0


def test_check_instance_reports_every_check():
    inst = random_instance(1, 0)
    res = check_instance(inst.R, inst.S, inst.id)
    assert set(res.outcomes) == set(CHECKS)
    assert FAIL not in res.outcomes.values()


def test_jacobson_constructions():
    built = [jacobson_construction(9, i) for i in range(10)]
    assert all(b is not None for b in built)
    assert all(b[0].pointwise_minimal is True for b in built)
