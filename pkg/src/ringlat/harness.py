"""Seeded random extensions and the verification harness.

Every check is a named consequence of the theory that must hold on every
instance; a ``fail`` is a bug, ``unconfirmed`` means a decider abstained and
``n/a`` means the hypotheses of the check do not hold.
"""

from __future__ import annotations

import itertools
import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

from .algebra import (
    Algebra,
    Subalgebra,
    extension_to_json,
    field_algebra,
    generated_subalgebra,
    monogenic_extension,
    product_algebra,
    truncated_poly_algebra,
)
from .canon import (
    canonical_chain,
    minimal_oracle,
    minimal_type,
    profile_matches_classification,
    tower_type_profile,
)
from .errors import InvalidPrecondition, NodeCapExceeded, PreconditionFailed, ScanCapExceeded
from .fields import GF, FieldScalar, find_irreducible
from .lattice import (
    enumerate_interval,
    is_atomistic,
    is_geometric,
    length as lattice_length,
    maximal_chain_lengths,
    maximal_chains,
    minimal_spanning_independent,
)
from .pointwise import (
    CO_PW,
    PW_EXTENSION,
    PW_PAIR,
    fip_shortcut_check,
    jacobson_builder,
    jacobson_square_check,
    length_dimension_check,
    pointwise_verdicts,
    pw_minimal_by_characterization,
    quadratic_pointwise_check,
    tower_equivalence_check,
    case_label,
)
from .ringstruct import conductor, crucial_report, ideal_generated, maximal_ideals, nilradical

PASS, FAIL, NA, UNCONFIRMED = "pass", "fail", "n/a", "unconfirmed"
OUTCOMES = (PASS, FAIL, NA, UNCONFIRMED)

CHECKS = (
    "dual-oracle-pw",
    "dual-oracle-pair",
    "dual-oracle-co-pw",
    "minimal-type-vs-oracle",
    "closure-methods-agree",
    "hasse-covers-are-minimal",
    "lattice-closed",
    "implication-chain",
    "crucial-ideal",
    "hereditary",
    "jacobson-square",
    "length-dimension",
    "case-label",
    "atomistic-when-pw",
    "pair-iff-geometric",
    "co-pw-length-two",
    "spanning-independent-atoms",
    "tower-profiles",
    "jordan-holder",
    "quadratic-pointwise",
    "fip-shortcut",
    "two-step-tower",
)

SMALL_LATTICE = 200
PAIRWISE_LATTICE = 60
PROFILE_LATTICE = 50
MAX_CHAINS = 200


@dataclass(frozen=True)
class Profile:
    primes: tuple[int, ...] = (2, 3)
    max_dim: int = 6

    def describe(self) -> str:
        return f"p in {list(self.primes)}, dim <= {self.max_dim}"


PROFILES = {
    "default": Profile(),
    "small": Profile((2,), 4),
    "wide": Profile((2, 3, 5), 8),
}


def parse_profile(text: str | None) -> Profile:
    """``default``, ``small``, ``wide`` or ``p=2,3;dim=5``."""
    if not text:
        return PROFILES["default"]
    if text in PROFILES:
        return PROFILES[text]
    primes, dim = PROFILES["default"].primes, PROFILES["default"].max_dim
    for part in text.split(";"):
        key, _, val = part.partition("=")
        key = key.strip()
        if key == "p":
            primes = tuple(int(v) for v in val.split(","))
        elif key == "dim":
            dim = int(val)
        else:
            raise ValueError(f"unknown profile key {key!r}")
    if any(p not in (2, 3, 5) for p in primes) or not 2 <= dim <= 8:
        raise ValueError("profiles allow p in {2,3,5} and 2 <= dim <= 8")
    return Profile(primes, dim)


# ---------------------------------------------------------------------------
# random instances
# ---------------------------------------------------------------------------


@dataclass
class Instance:
    id: str
    R: Subalgebra
    S: Algebra
    recipe: str

    def to_json(self) -> dict:
        obj = {"id": self.id, "recipe": self.recipe}
        obj.update(extension_to_json(self.R))
        return obj


def _random_block(rng: random.Random, F, room: int):
    kinds = ["split"]
    if room >= 2:
        kinds += ["squares", "products", "field", "monogenic"]
    kind = rng.choice(kinds)
    if kind == "split":
        return field_algebra(F), "F"
    if kind == "squares":
        m = 2 if room >= 4 and rng.random() < 0.4 else 1
        return truncated_poly_algebra(F, m, "squares"), f"sq({m})"
    if kind == "products":
        m = rng.randint(1, min(room - 1, 4))
        return truncated_poly_algebra(F, m, "squares-and-products"), f"nil({m})"
    if kind == "field":
        e = rng.randint(2, min(room, 3))
        coeffs = [FieldScalar(F, c) for c in find_irreducible(F, e)]
        return monogenic_extension(field_algebra(F), coeffs, var="g"), f"GF({F.p}^{e})"
    d = rng.randint(2, min(room, 3))
    coeffs = [F.from_int(rng.randrange(F.p)) for _ in range(d)] + [F.one]
    coeffs = [FieldScalar(F, c) for c in coeffs]
    return monogenic_extension(field_algebra(F), coeffs), "mono(" + ",".join(str(c.value) for c in coeffs) + ")"


def random_algebra(rng: random.Random, profile: Profile) -> tuple[Algebra, str]:
    p = rng.choice(profile.primes)
    F = GF(p)
    target = rng.randint(2, profile.max_dim)
    blocks, names, dim = [], [], 0
    while dim < target:
        A, name = _random_block(rng, F, target - dim)
        blocks.append(A)
        names.append(name)
        dim += A.dim
    S = blocks[0] if len(blocks) == 1 else product_algebra(blocks)[0]
    return S, f"GF({p}): " + " x ".join(names)


def _random_element(rng: random.Random, S: Algebra) -> tuple:
    F = S.field
    return tuple(F.from_int(rng.randrange(F.p)) for _ in range(S.dim))


def random_subalgebra(rng: random.Random, S: Algebra) -> tuple[Subalgebra, str]:
    """A proper subalgebra containing the base field."""
    k = S.scalars()
    for _ in range(8):
        mode = rng.choice(["scalars", "generated", "generated", "ideal", "ideal"])
        if mode == "scalars":
            return k, "scalars"
        if mode == "generated":
            gens = [_random_element(rng, S) for _ in range(rng.randint(1, 2))]
            R = generated_subalgebra(k, gens)
        else:
            gens = [_random_element(rng, S) for _ in range(rng.randint(1, 2))]
            I = ideal_generated(S.full(), gens).space
            if I.dim == S.dim:
                continue
            V = k.sum(I)
            R = Subalgebra(S, check=False, _rref=(V.rows, V.pivots))
        if R.dim < S.dim:
            return R, mode
    return k, "scalars"


def random_instance(seed: int, index: int, profile: Profile = Profile()) -> Instance:
    rng = random.Random(f"{seed}:{index}")
    S, recipe = random_algebra(rng, profile)
    R, mode = random_subalgebra(rng, S)
    return Instance(f"rand-{seed}-{index}", R, S, f"{recipe}; R: {mode}")


# ---------------------------------------------------------------------------
# checks
# ---------------------------------------------------------------------------


@dataclass
class InstanceResult:
    id: str
    outcomes: dict
    failures: list = dc_field(default_factory=list)
    seconds: float = 0.0


class _Recorder:
    def __init__(self, inst_id: str):
        self.id = inst_id
        self.outcomes: dict = {}
        self.failures: list = []

    def record(self, name: str, outcome: str, detail: str = ""):
        self.outcomes[name] = outcome
        if outcome == FAIL:
            self.failures.append({"check": name, "detail": detail})

    def bool(self, name: str, ok, detail: str = ""):
        if ok is None:
            self.record(name, UNCONFIRMED, detail)
        else:
            self.record(name, PASS if ok else FAIL, detail)


def _generating_cardinality(L) -> int:
    """Least number of elements generating ``S`` over ``R`` (capped at 3)."""
    mono = L.extensions[L.bottom]
    if L.top in mono:
        return 1
    for a, b in itertools.combinations(sorted(mono), 2):
        if L.join(a, b) == L.top:
            return 2
    return 3


def check_instance(R: Subalgebra, S, inst_id: str = "") -> InstanceResult:
    """Run every applicable check on ``R ⊂ S`` over a finite field."""
    t0 = time.perf_counter()
    S = S.full() if isinstance(S, Algebra) else S
    rec = _Recorder(inst_id)
    try:
        L = enumerate_interval(R, S)
    except (NodeCapExceeded, ScanCapExceeded):
        L = None
    verdicts = pointwise_verdicts(R, S, lattice=L)
    for name, prop in (("dual-oracle-pw", PW_EXTENSION), ("dual-oracle-pair", PW_PAIR),
                       ("dual-oracle-co-pw", CO_PW)):
        v = verdicts[prop]
        rec.bool(name, v.agree, f"definition {v.by_definition.value} vs characterization "
                                f"{v.by_characterization.value} ({v.by_characterization.clause})")
    pw = verdicts[PW_EXTENSION].value
    pair = verdicts[PW_PAIR].value
    copw = verdicts[CO_PW].value

    # minimal type against the element oracle
    pairs = [(R, S)]
    if L is not None and L.node_count <= SMALL_LATTICE:
        pairs += [(T, S) for T in L.nodes[1:-1]] + [(R, T) for T in L.nodes[1:-1]]
    bad = [(a.dim, b.dim) for a, b in pairs if minimal_type(a, b).is_minimal != minimal_oracle(a, b)]
    rec.bool("minimal-type-vs-oracle", not bad, f"disagreement on dims {bad[:3]}")
    minimal = minimal_type(R, S).is_minimal

    structural = canonical_chain(R, S, method="structural")
    elementwise = canonical_chain(R, S, method="elementwise")
    rec.bool("closure-methods-agree", structural.dims() == elementwise.dims()
             and structural.plus == elementwise.plus and structural.t == elementwise.t,
             f"{structural.dims()} vs {elementwise.dims()}")

    if L is None:
        for name in ("hasse-covers-are-minimal", "lattice-closed", "co-pw-length-two",
                     "spanning-independent-atoms", "tower-profiles", "jordan-holder",
                     "atomistic-when-pw", "pair-iff-geometric", "two-step-tower"):
            rec.record(name, NA)
    else:
        _lattice_checks(rec, L, R, S, pw, pair, copw)

    rec.bool("implication-chain", (not minimal or (pair is True)) and (pair is not True or pw is True)
             and (copw is not True or pair is True),
             f"minimal {minimal}, pair {pair}, pw {pw}, co-pw {copw}")

    if pw is True:
        _pw_checks(rec, L, R, S, pair, minimal)
    else:
        for name in ("crucial-ideal", "hereditary", "jacobson-square", "length-dimension", "case-label"):
            rec.record(name, NA)

    q = quadratic_pointwise_check(R, S)
    rec.record("quadratic-pointwise", NA) if not q.applicable else rec.bool(
        "quadratic-pointwise", q.holds, str(q.facts))
    try:
        f = fip_shortcut_check(R, S)
        rec.bool("fip-shortcut", f.holds, str(f.facts))
    except InvalidPrecondition:
        rec.record("fip-shortcut", NA)
    return InstanceResult(inst_id, rec.outcomes, rec.failures, time.perf_counter() - t0)


def _lattice_checks(rec: _Recorder, L, R, S, pw, pair, copw) -> None:
    n = L.node_count
    if n <= SMALL_LATTICE:
        bad = None
        for i, T in enumerate(L.nodes):
            for j in L.upper[i]:
                if not minimal_oracle(T, L.nodes[j]):
                    bad = (i, j)
        if bad is None and n <= PAIRWISE_LATTICE:
            for i, j in itertools.combinations(range(n), 2):
                if j not in L.upper[i] and L.leq(i, j) and minimal_oracle(L.nodes[i], L.nodes[j]):
                    bad = (i, j)
                    break
        rec.bool("hasse-covers-are-minimal", bad is None, f"edge {bad}")
        pairs = list(itertools.combinations(range(n), 2))
        if n > PAIRWISE_LATTICE:
            pairs = random.Random(n).sample(pairs, 200)
        ok = True
        for i, j in pairs:
            J = generated_subalgebra(L.nodes[i], L.nodes[j].rows)
            M = L.nodes[i].intersection(L.nodes[j])
            if J.rows not in L.index or M.rows not in L.index:
                ok = False
                break
        rec.bool("lattice-closed", ok, "compositum or intersection outside the node set")
    else:
        rec.record("hasse-covers-are-minimal", NA)
        rec.record("lattice-closed", NA)

    ell = lattice_length(L)
    if pair is None or copw is None:
        rec.record("co-pw-length-two", UNCONFIRMED)
    else:
        gen2 = _generating_cardinality(L) == 2
        rec.bool("co-pw-length-two", copw == (pair and ell == 2) == (pair and gen2),
                 f"co-pw {copw}, pair {pair}, length {ell}, two generators {gen2}")
    if pair is True:
        try:
            I = minimal_spanning_independent(L)
            rec.bool("spanning-independent-atoms", len(I) == ell, f"|I| = {len(I)}, length {ell}")
        except ValueError as exc:
            rec.record("spanning-independent-atoms", FAIL, str(exc))
    else:
        rec.record("spanning-independent-atoms", NA)

    if n <= PROFILE_LATTICE:
        ok, detail = True, ""
        for chain in itertools.islice(maximal_chains(L), MAX_CHAINS):
            profile = tower_type_profile([L.nodes[i] for i in chain])
            res = profile_matches_classification(R, S, profile)
            if not all(res.values()):
                ok, detail = False, f"chain {chain}: {res}"
                break
        rec.bool("tower-profiles", ok, detail)
    else:
        rec.record("tower-profiles", NA)

    geo, _ = is_geometric(L)
    if geo:
        rec.bool("jordan-holder", len(maximal_chain_lengths(L)) == 1, "maximal chains of different lengths")
    else:
        rec.record("jordan-holder", NA)
    if pw is True:
        rec.bool("atomistic-when-pw", is_atomistic(L)[0], "a node is not a compositum of atoms")
        rec.bool("pair-iff-geometric", (pair is True) == geo, f"pair {pair}, geometric {geo}")
    else:
        rec.record("atomistic-when-pw", NA)
        rec.record("pair-iff-geometric", NA)

    towers = [a for a in L.upper[L.bottom] if L.top in L.upper[a]] if ell == 2 else []
    if towers:
        rep = tower_equivalence_check(R, L.nodes[towers[0]], S)
        rec.bool("two-step-tower", rep.holds, str(rep.facts))
    else:
        rec.record("two-step-tower", NA)


def _pw_checks(rec: _Recorder, L, R, S, pair, minimal) -> None:
    cr = crucial_report(R, S)
    rec.bool("crucial-ideal", len(cr.msupp) == 1 and cr.crucial is not None, f"support size {len(cr.msupp)}")

    ok, detail = True, ""
    if L is not None and L.node_count <= SMALL_LATTICE:
        for T in L.nodes[1:]:
            if pw_minimal_by_characterization(R, T).value is not True:
                ok, detail = False, f"R ⊂ T not pointwise minimal (dim T {T.dim})"
                break
        if ok and pair is True and L.node_count <= PAIRWISE_LATTICE:
            for i, j in itertools.combinations(range(L.node_count), 2):
                if L.leq(i, j) and not L.is_pointwise_at(i):
                    ok, detail = False, f"node {i} is not pointwise minimal below the top"
                    break
                if L.leq(i, j) and pw_minimal_by_characterization(L.nodes[i], L.nodes[j]).value is not True:
                    ok, detail = False, f"T ⊂ T' not pointwise minimal for nodes {i}, {j}"
                    break
        rec.bool("hereditary", ok, detail)
    else:
        rec.record("hereditary", NA)

    maxR = maximal_ideals(R)
    if len(maxR) == 1 and conductor(R, S).space == maxR[0].space:
        rec.bool("jacobson-square", jacobson_square_check(R, S))
    else:
        rec.record("jacobson-square", NA)

    try:
        rep = length_dimension_check(R, S, L)
        rec.bool("length-dimension", rep.holds, f"{rep.clause}: {rep.lhs} vs {rep.rhs}")
    except (NodeCapExceeded, ScanCapExceeded):
        rec.record("length-dimension", NA)

    if minimal:
        rec.record("case-label", NA)
    else:
        try:
            case_label(R, S)
            rec.record("case-label", PASS)
        except AssertionError as exc:
            rec.record("case-label", FAIL, str(exc))


# ---------------------------------------------------------------------------
# Jacobson-radical constructions
# ---------------------------------------------------------------------------


def jacobson_construction(seed: int, index: int, profile: Profile = Profile()):
    """A seeded ``R ⊂ R + J`` from a random ideal ``J`` whose elements square
    to zero, with ``R`` the base field.  Returns ``None`` when the sampled
    algebra has no suitable ideal."""
    rng = random.Random(f"jacobson:{seed}:{index}")
    for _ in range(20):
        S, recipe = random_algebra(rng, profile)
        N = nilradical(S).space
        if N.dim == 0:
            continue
        P = S
        # elements of N annihilated by N generate ideals whose squares vanish
        gens = []
        for _ in range(4):
            v = N.combine([P.field.from_int(rng.randrange(P.field.p)) for _ in range(N.dim)])
            gens.append(v)
        for g in gens:
            J = ideal_generated(S.full(), [g]).space
            if J.dim == 0 or J.issubset(S.scalars()):
                continue
            try:
                return jacobson_builder(S.scalars(), S, J), recipe
            except PreconditionFailed:
                continue
    return None


# ---------------------------------------------------------------------------
# summaries
# ---------------------------------------------------------------------------


@dataclass
class HarnessSummary:
    seed: int
    count: int
    profile: str
    tallies: dict
    counterexamples: list
    seconds: float = 0.0

    @property
    def failed(self) -> int:
        return sum(t[FAIL] for t in self.tallies.values())

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "count": self.count,
            "profile": self.profile,
            "tallies": {k: {o: v[o] for o in OUTCOMES} for k, v in self.tallies.items()},
            "failures": self.failed,
            "counterexamples": self.counterexamples,
        }

    def format(self) -> str:
        width = max(len(c) for c in self.tallies) if self.tallies else 10
        lines = [f"seed {self.seed}, {self.count} instances, profile {self.profile}"]
        lines.append(f"{'check':<{width}}  " + "  ".join(f"{o:>11}" for o in OUTCOMES))
        for name, t in self.tallies.items():
            lines.append(f"{name:<{width}}  " + "  ".join(f"{t[o]:>11}" for o in OUTCOMES))
        lines.append(f"failures: {self.failed}")
        return "\n".join(lines)


def _run_one(args) -> tuple[dict, InstanceResult]:
    seed, index, profile = args
    inst = random_instance(seed, index, profile)
    return inst.to_json(), check_instance(inst.R, inst.S, inst.id)


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("RINGLAT_THREADS", "1")))
    except ValueError:
        return 1


def run_harness(seed: int, count: int, profile: Profile = Profile(), threads: int | None = None) -> HarnessSummary:
    """Check ``count`` seeded instances; results are independent of ``threads``."""
    t0 = time.perf_counter()
    threads = thread_count() if threads is None else threads
    jobs = [(seed, i, profile) for i in range(count)]
    if threads > 1 and count > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_one, jobs, chunksize=4))
    else:
        results = [_run_one(j) for j in jobs]
    tallies = {name: Counter({o: 0 for o in OUTCOMES}) for name in CHECKS}
    counterexamples = []
    for inst_json, res in results:
        for name, outcome in res.outcomes.items():
            tallies.setdefault(name, Counter({o: 0 for o in OUTCOMES}))[outcome] += 1
        for f in res.failures:
            counterexamples.append({"instance": inst_json, **f})
    return HarnessSummary(seed, count, profile.describe(), tallies, counterexamples, time.perf_counter() - t0)
