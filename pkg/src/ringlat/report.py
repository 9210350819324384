"""Full analysis of one extension as a JSON-ready report, and comparison of a
catalog entry's expected verdicts against computed ones."""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from .algebra import DEFAULT_SCAN_CAP, Subalgebra, adjoin
from .canon import DEFAULT_SAMPLE_BUDGET, _as_sub, canonical_chain, minimal_type, tower_type_profile
from .catalog import CatalogEntry
from .errors import UnsupportedDecomposition
from .lattice import atoms, enumerate_interval, is_geometric, length as lattice_length
from .pointwise import (
    CO_PW,
    PW_EXTENSION,
    PW_PAIR,
    interval_length,
    pointwise_verdicts,
    tower_equivalence_check,
)
from .ringstruct import crucial_report


def _basis(F, rows) -> list:
    return [[F.encode(c) for c in r] for r in rows]


@dataclass
class ExtensionReport:
    instance_id: str
    R: Subalgebra
    S: Subalgebra
    body: dict
    timings: dict = dc_field(default_factory=dict)

    @property
    def pw(self) -> bool | None:
        return self.body["pointwise"][PW_EXTENSION]["value"]

    @property
    def pair(self) -> bool | None:
        return self.body["pointwise"][PW_PAIR]["value"]

    @property
    def co_pw(self) -> bool | None:
        return self.body["pointwise"][CO_PW]["value"]

    @property
    def case(self) -> str | None:
        return self.body.get("case")

    @property
    def lattice(self) -> dict | None:
        return self.body.get("lattice")

    def to_json(self, with_timings: bool = False) -> dict:
        obj = {"instance_id": self.instance_id, **self.body}
        if with_timings:
            obj["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return obj


def analyze(R: Subalgebra, S=None, instance_id: str = "", with_lattice: bool = True,
            cap: int = DEFAULT_SCAN_CAP, budget: int = DEFAULT_SAMPLE_BUDGET, seed: int = 0) -> ExtensionReport:
    """Conductor, canonical chain, minimal type, the three pointwise verdicts
    from both deciders, case label and (over finite fields) lattice statistics.

    Raises ``ScanCapExceeded`` / ``NodeCapExceeded`` when a cap is hit."""
    S = _as_sub(R.parent if S is None else S)
    F = S.field
    timings: dict = {}
    body: dict = {"field": F.descriptor(), "dims": {"R": R.dim, "S": S.dim}}

    t0 = time.perf_counter()
    cr = crucial_report(R, S)
    body["conductor"] = _basis(F, cr.conductor.space.rows)
    body["crucial_ideal"] = _basis(F, cr.crucial.space.rows) if cr.crucial is not None else None
    chain = canonical_chain(R, S, cap=cap, budget=budget, seed=seed)
    body["canonical_chain"] = {
        "dims": list(chain.dims()),
        "seminormalization_method": chain.plus_flag,
        "t_closure_method": chain.t_flag,
        "certified": chain.certified,
    }
    mt = minimal_type(R, S) if R.dim < S.dim else None
    body["minimal_type"] = mt.kind if mt else None
    timings["structure"] = time.perf_counter() - t0

    L = None
    if with_lattice and F.is_finite:
        t0 = time.perf_counter()
        L = enumerate_interval(R, S, cap=cap)
        geo, _ = is_geometric(L)
        body["lattice"] = {"nodes": L.node_count, "atoms": len(atoms(L)), "length": lattice_length(L),
                           "geometric": geo}
        timings["lattice"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    verdicts = pointwise_verdicts(R, S, lattice=L, cap=cap, budget=budget, seed=seed)
    body["pointwise"] = {}
    for prop, v in verdicts.items():
        entry = v.to_json(F)
        entry["value"] = v.value
        body["pointwise"][prop] = entry
    body["case"] = verdicts[PW_EXTENSION].case_label
    timings["pointwise"] = time.perf_counter() - t0
    return ExtensionReport(instance_id, R, S, body, timings)


# ---------------------------------------------------------------------------
# expected verdicts
# ---------------------------------------------------------------------------


def _step_types(entry: CatalogEntry):
    exp = entry.expected["step_types"]
    if isinstance(exp, dict):
        return {name: minimal_type(entry.R, adjoin(entry.R, entry.elements[name])).kind for name in exp}
    return [m.kind for m in tower_type_profile(entry.tower)]


def computed_facts(entry: CatalogEntry, report: ExtensionReport) -> dict:
    """Computed values for every key of ``entry.expected``."""
    out: dict = {}
    for key in entry.expected:
        if key == "minimal":
            out[key] = report.body["minimal_type"] not in (None, "NotMinimal")
        elif key == "minimal_type":
            out[key] = report.body["minimal_type"]
        elif key == "pw":
            out[key] = report.pw
        elif key == "pair":
            out[key] = report.pair
        elif key == "co_pw":
            out[key] = report.co_pw
        elif key == "case":
            out[key] = report.case
        elif key in ("nodes", "atoms", "geometric") and report.lattice:
            out[key] = report.lattice[key]
        elif key == "length":
            if report.lattice:
                out[key] = report.lattice["length"]
            else:
                try:
                    out[key] = interval_length(entry.R, entry.top)[0]
                except UnsupportedDecomposition:
                    out[key] = None
        elif key == "step_types":
            out[key] = _step_types(entry)
        elif key == "residue_condition":
            out[key] = tower_equivalence_check(entry.R, entry.tower[1], entry.top).facts["residue_condition"]
        else:
            out[key] = None
    return out


def compare_expected(entry: CatalogEntry, report: ExtensionReport | None = None, **kw) -> dict:
    """``{key: (expected, computed, match)}``."""
    report = report if report is not None else analyze(entry.R, entry.top, entry.name, **kw)
    got = computed_facts(entry, report)
    return {k: (v, got[k], v == got[k]) for k, v in entry.expected.items()}
