from __future__ import annotations

import json

from ringlat import catalog
from ringlat.report import analyze


def test_report_fields():
    e = catalog.get("split(n=3,q=2)")
    rep = analyze(e.R, e.top, e.name)
    obj = rep.to_json()
    assert obj["instance_id"] == "split(n=3,q=2)"
    assert obj["dims"] == {"R": 1, "S": 3}
    assert obj["lattice"] == {"nodes": 5, "atoms": 3, "length": 2, "geometric": True}
    assert obj["case"] == "(b)" and obj["minimal_type"] == "NotMinimal"
    assert obj["canonical_chain"]["dims"] == [1, 1, 3, 3]
    assert "timings" not in obj and "timings" in rep.to_json(with_timings=True)


def test_case_label_only_when_pointwise_minimal_and_not_minimal():
    for name in ("split(n=2,q=2)", "split(n=3,q=3)", "ff(q=2,e=3)"):
        e = catalog.get(name)
        assert analyze(e.R, e.top).case is None


def test_report_is_reproducible():
    e = catalog.get("ex1(m=2)")
    a = json.dumps(analyze(e.R, e.top, e.name).to_json())
    b = json.dumps(analyze(e.R, e.top, e.name).to_json())
    assert a == b


def test_rational_function_report_has_no_lattice():
    e = catalog.get("ex5")
    rep = analyze(e.R, e.top, budget=20)
    assert rep.lattice is None and rep.pw is True and rep.case == "(d)"
    assert rep.body["pointwise"]["PW-Extension"]["by_definition"]["value"] is None
    json.dumps(rep.to_json())
