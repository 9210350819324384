from __future__ import annotations

import json

import pytest

from ringlat import catalog
from ringlat.errors import UnknownExample
from ringlat.report import compare_expected


@pytest.mark.parametrize("entry", catalog.all_entries(), ids=lambda e: e.name)
def test_expected_metadata_matches(entry):
    budget = 1000 if entry.S.field.is_finite else 20
    cmp = compare_expected(entry, budget=budget)
    bad = {k: v for k, v in cmp.items() if not v[2]}
    assert not bad


@pytest.mark.parametrize(
    "text,name,kwargs",
    [
        ("split(3,2)", "split", {"n": 3, "q": 2}),
        ("split(n=4, q=3)", "split", {"n": 4, "q": 3}),
        ("ex5", "ex5", {}),
        ("prop7170(m=3,gens=x1+x2)", "prop7170", {"m": 3, "gens": ("x1", "x2")}),
    ],
)
def test_parse_name(text, name, kwargs):
    assert catalog.parse_name(text) == (name, kwargs)


@pytest.mark.parametrize("text", ["nope", "split(1,2,3)", "split(z=3)", "split(n=x)", "(("])
def test_bad_names(text):
    with pytest.raises(UnknownExample):
        catalog.parse_name(text)


def test_fixture_json_is_complete():
    e = catalog.get("tower-partition(n=3)")
    obj = json.loads(json.dumps(e.to_json()))
    assert obj["id"] == "tower-partition(n=3)"
    assert len(obj["tower"]) == 3 and obj["expected"]["nodes"] == 5
    e = catalog.get("ex5")
    obj = e.to_json()
    assert set(obj["elements"]) == {"x", "y"} and obj["field"]["kind"] == "rf"


def test_ex2_m2_is_three_dimensional():
    e = catalog.get("ex2", m=2)
    assert e.S.dim == 3 and e.expected["co_pw"] is True


def test_prop7170_builder():
    e = catalog.get("prop7170(m=3,gens=x1+x2)")
    cmp = compare_expected(e)
    assert all(m for _, _, m in cmp.values())
