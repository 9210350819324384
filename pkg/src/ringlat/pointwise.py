"""Pointwise minimal extensions, pointwise minimal pairs and co-pointwise
minimal extensions.

Each property has two independent deciders:

* ``*_by_definition`` scans elements ``x`` of ``S`` outside ``R`` (exhaustively
  over finite fields, on seeded candidates over rational function fields) and
  tests minimality of monogenic steps directly;
* ``*_by_characterization`` reduces modulo the conductor ``M = (R:S)`` to
  ``k = R/M ⊂ S' = S/M`` and checks structural conditions on the
  seminormalization, the t-closure and the nilradical ``N`` of ``S'``.

Verdict values are three-valued: ``True``, ``False`` or ``None`` (unconfirmed).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import (
    DEFAULT_SCAN_CAP,
    Algebra,
    Ideal,
    Subalgebra,
    Subspace,
    adjoin,
    is_ideal_of,
)
from .canon import (
    DEFAULT_SAMPLE_BUDGET,
    ResidueExtension,
    _as_sub,
    _height_one_radicial,
    _minimal_oracle_gf,
    _rf_candidates,
    is_infra_integral,
    is_seminormal,
    is_t_closed,
    minimal_oracle_witness,
    minimal_type,
    reduce_mod_conductor,
    structural_seminormalization,
    structural_t_closure,
)
from .errors import (
    InvalidPrecondition,
    PreconditionFailed,
    UnsupportedDecomposition,
)
from .lattice import IntervalLattice, enumerate_interval, length as lattice_length
from .ringstruct import (
    conductor,
    is_maximal_ideal,
    local_decomposition,
    maximal_ideals,
    nilradical,
)

PW_EXTENSION = "PW-Extension"
PW_PAIR = "PW-Pair"
CO_PW = "Co-PW"

CASE_SUBINTEGRAL = "(a)"
CASE_SEMINORMAL_INFRA = "(b)"
CASE_T_CLOSED = "(c)"
CASE_MIXED = "(d)"

CASE_NAMES = {
    CASE_SUBINTEGRAL: "subintegral",
    CASE_SEMINORMAL_INFRA: "seminormal-infra-integral",
    CASE_T_CLOSED: "t-closed-radicial",
    CASE_MIXED: "mixed",
}

RF_PAIR_NODE_BUDGET = 8


@dataclass
class VerdictSide:
    """One decider's answer: value, how it was obtained and why."""

    value: bool | None
    method: str
    clause: str = ""
    witness: object = None

    @property
    def certified(self) -> bool:
        return self.value is not None

    def to_json(self, F=None) -> dict:
        out = {"value": self.value, "method": self.method, "clause": self.clause}
        if self.witness is not None:
            out["witness"] = _witness_json(self.witness, F)
        return out


@dataclass
class PointwiseVerdict:
    prop: str
    by_definition: VerdictSide
    by_characterization: VerdictSide
    case_label: str | None = None

    @property
    def agree(self) -> bool | None:
        """``None`` unless both sides are certified."""
        a, b = self.by_definition.value, self.by_characterization.value
        if a is None or b is None:
            return None
        return a == b

    @property
    def value(self) -> bool | None:
        if self.by_characterization.value is not None:
            return self.by_characterization.value
        return self.by_definition.value

    def to_json(self, F=None) -> dict:
        return {
            "property": self.prop,
            "by_definition": self.by_definition.to_json(F),
            "by_characterization": self.by_characterization.to_json(F),
            "agree": self.agree,
        }


def _witness_json(w, F):
    if isinstance(w, Subspace):
        return {"basis": [[F.encode(c) for c in r] for r in w.rows]} if F else {"dim": w.dim}
    if isinstance(w, tuple) and F is not None:
        return [F.encode(c) for c in w]
    return str(w)


# ---------------------------------------------------------------------------
# reduction modulo the conductor
# ---------------------------------------------------------------------------


@dataclass
class Residual:
    """``k ⊂ S'`` with ``S' = S/M`` and its canonical closures inside ``S'``."""

    M: Ideal
    ext: ResidueExtension
    plus: Subalgebra
    t: Subalgebra
    N: Subspace

    @property
    def Q(self) -> Algebra:
        return self.ext.Q

    @property
    def k(self) -> Subalgebra:
        return self.ext.k

    @property
    def dim_over_k(self) -> int:
        return self.Q.dim // self.k.dim

    @property
    def k_is_f2(self) -> bool:
        F = self.Q.field
        return F.is_finite and F.order == 2 and self.k.dim == 1

    @property
    def subintegral(self) -> bool:
        return self.plus.dim == self.Q.dim

    @property
    def seminormal(self) -> bool:
        return self.plus.dim == self.k.dim

    @property
    def infra_integral(self) -> bool:
        return self.t.dim == self.Q.dim

    @property
    def t_closed(self) -> bool:
        return self.t.dim == self.k.dim

    def radicial(self) -> bool:
        return _height_one_radicial(self.Q, self.k)

    def nil_elementwise_square_zero(self) -> bool:
        """``N^[2] = 0``: basis squares in characteristic 2, ``N^2 = 0`` otherwise."""
        Q = self.Q
        if Q.field.p == 2:
            z = Q.zero_vector()
            return all(Q.mul(v, v) == z for v in self.N.rows)
        return self.nil_square_zero()

    def nil_square_zero(self) -> bool:
        return self.N.product(self.N).dim == 0


def residual(R: Subalgebra, S) -> Residual | None:
    """Reduce modulo ``M = (R:S)``; ``None`` when ``M`` is not maximal in ``R``.

    Raises ``UnsupportedDecomposition`` when the closures cannot be certified."""
    S = _as_sub(S)
    M = conductor(R, S)
    if not is_maximal_ideal(R, M):
        return None
    ext = reduce_mod_conductor(R, S, M)
    Q, k = ext.Q, ext.k
    plus = structural_seminormalization(k, Q)
    t = structural_t_closure(k, Q)
    return Residual(M, ext, plus, t, nilradical(Q).space)


def _minimal_shortcut(R: Subalgebra, S):
    """``(True, kind)``, ``(False, reason)`` or ``(None, reason)``."""
    try:
        mt = minimal_type(R, S)
    except UnsupportedDecomposition as exc:
        return None, str(exc)
    return (True, mt.kind) if mt.is_minimal else (False, mt.reason)


def _char_side(R, S, decide) -> VerdictSide:
    """Shared pipeline: minimal shortcut, maximal conductor, then ``decide``."""
    S = _as_sub(S)
    minimal, info = _minimal_shortcut(R, S)
    return decide(R, S, minimal, info)


# ---------------------------------------------------------------------------
# pointwise minimal extension
# ---------------------------------------------------------------------------


def _is_minimal_step(U: Subalgebra, V: Subalgebra, cap: int, budget: int, seed: int) -> bool | None:
    """Minimality of ``U ⊂ V`` for the definition side."""
    if V.field.is_finite:
        return _minimal_oracle_gf(U, V, cap)[0]
    try:
        return minimal_type(U, V).is_minimal
    except UnsupportedDecomposition:
        return minimal_oracle_witness(U, V, cap, budget, seed)[0]


def _scan(R: Subalgebra, S: Subalgebra, mode: str, cap: int, budget: int, seed: int):
    if mode == "auto":
        mode = "exhaustive" if S.field.is_finite else "sampled"
    if mode == "exhaustive":
        if not S.field.is_finite:
            raise InvalidPrecondition("exhaustive scans need a finite field")
        return mode, R.coset_representatives(S, projective=True, cap=cap)
    if mode == "sampled":
        return mode, _rf_candidates(R, S, budget, seed)
    raise ValueError(f"unknown scan mode {mode!r}")


def pw_minimal_by_definition(R: Subalgebra, S, mode: str = "auto", cap: int = DEFAULT_SCAN_CAP,
                             budget: int = DEFAULT_SAMPLE_BUDGET, seed: int = 0) -> VerdictSide:
    """``R ⊂ R[x]`` minimal for every ``x`` outside ``R``."""
    S = _as_sub(S)
    if R.dim == S.dim:
        raise InvalidPrecondition("R = S is not a proper extension")
    mode, xs = _scan(R, S, mode, cap, budget, seed)
    seen: dict = {}
    undecided = False
    for x in xs:
        U = adjoin(R, x)
        if U.rows not in seen:
            seen[U.rows] = _is_minimal_step(R, U, cap, budget, seed)
        verdict = seen[U.rows]
        if verdict is False:
            return VerdictSide(False, mode, "R ⊂ R[x] is not minimal", x)
        if verdict is None:
            undecided = True
    if mode == "exhaustive" and not undecided:
        return VerdictSide(True, mode, "every R ⊂ R[x] is minimal")
    return VerdictSide(None, mode, "no witness among the scanned elements")


def _pw_decide(R, S, minimal, info) -> VerdictSide:
    if minimal:
        return VerdictSide(True, "characterization", f"minimal ({info})")
    try:
        res = residual(R, S)
    except UnsupportedDecomposition as exc:
        return VerdictSide(None, "characterization", f"unsupported: {exc}")
    if res is None:
        return VerdictSide(False, "characterization", "conductor is not maximal")
    c1 = (
        res.plus == res.t
        and res.nil_elementwise_square_zero()
        and (res.infra_integral or res.radicial())
    )
    if c1:
        return VerdictSide(True, "characterization", "clause (1): ⁺ = ᵗ, N^[2] = 0, radicial above ᵗ")
    if res.k_is_f2 and res.seminormal and res.infra_integral:
        return VerdictSide(True, "characterization", "clause (3): |k| = 2, seminormal infra-integral")
    if minimal is None:
        return VerdictSide(None, "characterization", f"no clause holds and minimality is undecided: {info}")
    return VerdictSide(False, "characterization", "neither clause (1) nor clause (3) holds")


def pw_minimal_by_characterization(R: Subalgebra, S) -> VerdictSide:
    return _char_side(R, S, _pw_decide)


# ---------------------------------------------------------------------------
# pointwise minimal pair
# ---------------------------------------------------------------------------


def pw_pair_by_definition(R: Subalgebra, S, lattice: IntervalLattice | None = None,
                          cap: int = DEFAULT_SCAN_CAP, budget: int = DEFAULT_SAMPLE_BUDGET,
                          seed: int = 0, base: VerdictSide | None = None) -> VerdictSide:
    """``T ⊂ S`` pointwise minimal for every ``T`` in ``[R, S]`` other than ``S``.

    Over a finite field the lattice is enumerated and, at each node ``T``, the
    one-step extensions ``T[x]`` must be pairwise incomparable (equivalently,
    each ``T ⊂ T[x]`` is minimal).  Over rational function fields sampled
    intermediate rings can only refute; ``base`` is a sampled verdict for
    ``R ⊂ S`` already computed by the caller."""
    S = _as_sub(S)
    if S.field.is_finite:
        L = lattice if lattice is not None else enumerate_interval(R, S, cap=cap)
        for i, T in enumerate(L.nodes[:-1]):
            if not L.is_pointwise_at(i):
                return VerdictSide(False, "lattice", "T ⊂ S is not pointwise minimal", T)
        return VerdictSide(True, "lattice", f"all {L.node_count - 1} proper nodes are pointwise minimal")
    if base is None or base.method != "sampled":
        base = pw_minimal_by_definition(R, S, "sampled", cap, budget, seed)
    if base.value is False:
        return VerdictSide(False, "sampled", "R ⊂ S is not pointwise minimal", R)
    tried = set()
    for x in _rf_candidates(R, S, budget, seed):
        T = adjoin(R, x)
        if T.dim == S.dim or T.rows in tried:
            continue
        tried.add(T.rows)
        side = pw_minimal_by_definition(T, S, "sampled", cap, max(budget // 20, 10), seed)
        if side.value is False:
            return VerdictSide(False, "sampled", "T ⊂ S is not pointwise minimal", T)
        if len(tried) >= RF_PAIR_NODE_BUDGET:
            break
    return VerdictSide(None, "sampled", "no witness among the sampled intermediate rings")


def _pair_decide(R, S, minimal, info) -> VerdictSide:
    if minimal:
        return VerdictSide(True, "characterization", f"minimal ({info})")
    try:
        res = residual(R, S)
    except UnsupportedDecomposition as exc:
        return VerdictSide(None, "characterization", f"unsupported: {exc}")
    if res is None:
        return VerdictSide(False, "characterization", "conductor is not maximal")
    if res.t_closed and res.nil_elementwise_square_zero() and res.radicial():
        return VerdictSide(True, "characterization", "clause (1) with ᵗk = k: height-one radicial")
    if res.subintegral and res.nil_square_zero():
        return VerdictSide(True, "characterization", "clause (2): subintegral, N² = 0")
    if res.k_is_f2 and res.seminormal and res.infra_integral and res.dim_over_k <= 3:
        return VerdictSide(True, "characterization", "clause (4): |k| = 2, S' ≅ k^n, n ≤ 3")
    if minimal is None:
        return VerdictSide(None, "characterization", f"no clause holds and minimality is undecided: {info}")
    return VerdictSide(False, "characterization", "none of clauses (1), (2), (4) holds")


def pw_pair_by_characterization(R: Subalgebra, S) -> VerdictSide:
    return _char_side(R, S, _pair_decide)


# ---------------------------------------------------------------------------
# co-pointwise minimal extension
# ---------------------------------------------------------------------------


def co_pw_by_definition(R: Subalgebra, S, mode: str = "auto", cap: int = DEFAULT_SCAN_CAP,
                        budget: int = DEFAULT_SAMPLE_BUDGET, seed: int = 0) -> VerdictSide:
    """``R[x] ⊂ S`` minimal (in particular proper) for every ``x`` outside ``R``."""
    S = _as_sub(S)
    if R.dim == S.dim:
        raise InvalidPrecondition("R = S is not a proper extension")
    mode, xs = _scan(R, S, mode, cap, budget, seed)
    seen: dict = {}
    undecided = False
    for x in xs:
        U = adjoin(R, x)
        if U.dim == S.dim:
            return VerdictSide(False, mode, "R[x] = S", x)
        if U.rows not in seen:
            seen[U.rows] = _is_minimal_step(U, S, cap, budget, seed)
        verdict = seen[U.rows]
        if verdict is False:
            return VerdictSide(False, mode, "R[x] ⊂ S is not minimal", x)
        if verdict is None:
            undecided = True
    if mode == "exhaustive" and not undecided:
        return VerdictSide(True, mode, "every R[x] ⊂ S is minimal")
    return VerdictSide(None, mode, "no witness among the scanned elements")


def _copw_decide(R, S, minimal, info) -> VerdictSide:
    if minimal:
        return VerdictSide(False, "characterization", "minimal extensions have R[x] = S")
    try:
        res = residual(R, S)
    except UnsupportedDecomposition as exc:
        return VerdictSide(None, "characterization", f"unsupported: {exc}")
    if res is None:
        return VerdictSide(False, "characterization", "conductor is not maximal")
    kd = res.k.dim
    if res.subintegral and res.N.dim == 2 * kd and res.nil_square_zero():
        return VerdictSide(True, "characterization", "clause (1): subintegral, dim_k N = 2, N² = 0")
    if res.k_is_f2 and res.Q.dim == 3 and res.N.dim == 0:
        dec = local_decomposition(res.Q)
        if dec.count == 3 and all(d == 1 for d in dec.residue_dims):
            return VerdictSide(True, "characterization", "clause (2): |k| = 2, S' ≅ k³")
    if res.N.dim == 0 and res.t_closed and res.radicial():
        p = res.Q.field.p
        if res.dim_over_k == p * p:
            maxQ = maximal_ideals(res.Q)
            if len(maxQ) == 1 and maxQ[0].dim == 0:
                return VerdictSide(True, "characterization", "clause (3): radicial field extension of degree p²")
    if minimal is None:
        return VerdictSide(None, "characterization", f"no clause holds and minimality is undecided: {info}")
    return VerdictSide(False, "characterization", "none of the three clauses holds")


def co_pw_by_characterization(R: Subalgebra, S) -> VerdictSide:
    return _char_side(R, S, _copw_decide)


# ---------------------------------------------------------------------------
# combined verdicts and case labels
# ---------------------------------------------------------------------------


def pointwise_verdicts(R: Subalgebra, S, lattice: IntervalLattice | None = None,
                       cap: int = DEFAULT_SCAN_CAP, budget: int = DEFAULT_SAMPLE_BUDGET,
                       seed: int = 0) -> dict[str, PointwiseVerdict]:
    S = _as_sub(S)
    pw_def = pw_minimal_by_definition(R, S, cap=cap, budget=budget, seed=seed)
    pw = PointwiseVerdict(PW_EXTENSION, pw_def, pw_minimal_by_characterization(R, S))
    pair = PointwiseVerdict(
        PW_PAIR,
        pw_pair_by_definition(R, S, lattice, cap=cap, budget=budget, seed=seed, base=pw_def),
        pw_pair_by_characterization(R, S),
    )
    copw = PointwiseVerdict(
        CO_PW,
        co_pw_by_definition(R, S, cap=cap, budget=budget, seed=seed),
        co_pw_by_characterization(R, S),
    )
    if pw.by_characterization.value:
        minimal, _ = _minimal_shortcut(R, S)
        if minimal is False:
            pw.case_label = case_label(R, S)
    return {PW_EXTENSION: pw, PW_PAIR: pair, CO_PW: copw}


def t_closure_in_S(R: Subalgebra, S, res: Residual) -> Subalgebra:
    """Lift of ``ᵗk ⊆ S'`` back to ``ᵗR ⊆ S``."""
    V = res.ext.lift(res.t)
    return Subalgebra(_as_sub(S).parent, check=False, _rref=(V.rows, V.pivots))


def case_label(R: Subalgebra, S) -> str:
    """(a) subintegral, (b) seminormal infra-integral, (c) t-closed radicial or
    (d) mixed, for a pointwise minimal extension that is not minimal."""
    S = _as_sub(S)
    side = pw_minimal_by_characterization(R, S)
    if side.value is not True:
        raise InvalidPrecondition("extension is not certified pointwise minimal")
    minimal, _ = _minimal_shortcut(R, S)
    if minimal is not False:
        raise InvalidPrecondition("extension is minimal (or undecided)")
    res = residual(R, S)
    if res.subintegral:
        return CASE_SUBINTEGRAL
    if res.seminormal and res.infra_integral:
        return CASE_SEMINORMAL_INFRA
    if res.t_closed:
        if not res.radicial():
            raise AssertionError("t-closed pointwise minimal extension is not height-one radicial")
        return CASE_T_CLOSED
    T = t_closure_in_S(R, S, res)
    if pw_minimal_by_characterization(T, S).value is not True:
        raise AssertionError("in the mixed case ᵗR ⊂ S must be pointwise minimal")
    return CASE_MIXED


# ---------------------------------------------------------------------------
# lengths versus residue dimensions
# ---------------------------------------------------------------------------


def greedy_chain_length(U: Subalgebra, V: Subalgebra, budget: int = 40, seed: int = 0) -> int:
    """Length of a maximal chain from ``U`` to ``V`` built from certified
    minimal monogenic steps, first certified candidate in sampling order."""
    cur, steps = U, 0
    while cur.dim < V.dim:
        seen, nxt = set(), None
        for x in _rf_candidates(cur, V, budget, seed):
            W = adjoin(cur, x)
            if W.dim == cur.dim or W.rows in seen:
                continue
            seen.add(W.rows)
            try:
                if minimal_type(cur, W).is_minimal:
                    nxt = W
                    break
            except UnsupportedDecomposition:
                continue
        if nxt is None:
            raise UnsupportedDecomposition("no certified minimal step found")
        cur, steps = nxt, steps + 1
    return steps


def interval_length(R: Subalgebra, S, lattice: IntervalLattice | None = None,
                    cap: int = DEFAULT_SCAN_CAP) -> tuple[int, str]:
    """``(ℓ[R,S], method)``: lattice enumeration over finite fields, a greedy
    chain of certified minimal steps otherwise."""
    S = _as_sub(S)
    if R.dim == S.dim:
        return 0, "trivial"
    if S.field.is_finite:
        L = lattice if lattice is not None else enumerate_interval(R, S, cap=cap)
        return lattice_length(L), "lattice"
    return greedy_chain_length(R, S), "greedy-chain"


@dataclass
class LengthReport:
    clause: str
    lhs: int
    rhs: int
    length: int
    method: str
    details: dict = dc_field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and self.details.get("extra_holds", True)


def length_dimension_check(R: Subalgebra, S, lattice: IntervalLattice | None = None,
                           cap: int = DEFAULT_SCAN_CAP) -> LengthReport:
    """Compare ``dim_k(S/M)`` with the length of ``[R, S]``."""
    S = _as_sub(S)
    if pw_minimal_by_characterization(R, S).value is not True:
        raise InvalidPrecondition("extension is not certified pointwise minimal")
    res = residual(R, S)
    d = res.dim_over_k
    ell, method = interval_length(R, S, lattice, cap)
    if res.infra_integral:
        return LengthReport("infra-integral", d, 1 + ell, ell, method)
    p = res.Q.field.p
    if res.t_closed:
        minimal, _ = _minimal_shortcut(R, S)
        if minimal:
            return LengthReport("t-closed minimal", ell, 1, ell, method)
        return LengthReport("t-closed", d, p ** ell, ell, method)
    dN = res.N.dim // res.k.dim
    T = t_closure_in_S(R, S, res)
    ell_t, m2 = interval_length(R, T, None, cap)
    rhs = dN + p ** (ell - dN)
    return LengthReport(
        "mixed", d, rhs, ell, method,
        {"dim_nil": dN, "length_to_t_closure": ell_t, "length_method": m2, "extra_holds": dN == ell_t},
    )


# ---------------------------------------------------------------------------
# Jacobson radical construction
# ---------------------------------------------------------------------------


def _squares_in(P: Algebra, rows, M: Subspace) -> bool:
    """Every element of ``span(rows)`` squares into ``M``."""
    if not all(M.contains(P.mul(v, v)) for v in rows):
        return False
    if P.field.p == 2:
        return True
    return all(M.contains(P.mul(a, b)) for i, a in enumerate(rows) for b in rows[i + 1:])


def jacobson_radical(S) -> Subspace:
    S = _as_sub(S)
    V: Subspace = S
    for Q in maximal_ideals(S):
        V = V.intersection(Q.space)
    return V


def _local_with_conductor(R: Subalgebra, S: Subalgebra) -> Ideal:
    maxR = maximal_ideals(R)
    if len(maxR) != 1:
        raise PreconditionFailed("R-local", "R is not a local ring")
    M = maxR[0]
    if conductor(R, S).space != M.space:
        raise PreconditionFailed("conductor-maximal", "the conductor (R:S) is not the maximal ideal of R")
    return M


def jacobson_square_check(R: Subalgebra, S) -> bool:
    """``J^[2] ⊆ M`` for the Jacobson radical ``J`` of ``S``; needs ``R`` local
    with conductor ``M``."""
    S = _as_sub(S)
    M = _local_with_conductor(R, S)
    J = jacobson_radical(S)
    return _squares_in(S.parent, J.rows, M.space)


@dataclass
class JacobsonExtension:
    R: Subalgebra
    T: Subalgebra
    J: Subspace
    by_characterization: VerdictSide
    by_definition: VerdictSide | None

    @property
    def pointwise_minimal(self) -> bool | None:
        return self.by_characterization.value


def jacobson_builder(R: Subalgebra, S, J) -> JacobsonExtension:
    """Build ``R ⊂ R + J`` for an ideal ``J`` of ``S`` with ``J ⊄ R`` and
    ``J^[2] ⊆ M``; the result is certified pointwise minimal."""
    S = _as_sub(S)
    P = S.parent
    if isinstance(J, Ideal):
        J = J.space
    elif not isinstance(J, Subspace):
        J = Subspace(P, J)
    M = _local_with_conductor(R, S)
    if not J.issubset(S) or not is_ideal_of(J, S):
        raise PreconditionFailed("J-ideal", "J is not an ideal of S")
    if J.issubset(R):
        raise PreconditionFailed("J-not-in-R", "J is contained in R")
    if not _squares_in(P, J.rows, M.space):
        raise PreconditionFailed("J-squares", "some element of J squares outside M")
    V = R.sum(J)
    T = Subalgebra(P, check=True, _rref=(V.rows, V.pivots))
    char = pw_minimal_by_characterization(R, T)
    defn = pw_minimal_by_definition(R, T) if P.field.is_finite else None
    if char.value is False or (defn is not None and defn.value is False):
        raise AssertionError("R ⊂ R + J is not pointwise minimal")
    return JacobsonExtension(R, T, J, char, defn)


# ---------------------------------------------------------------------------
# quadratic extensions, FIP shortcut, two-step towers
# ---------------------------------------------------------------------------


def quadratic_witness(R: Subalgebra, S, cap: int = DEFAULT_SCAN_CAP):
    """First ``t`` with ``t² ∉ R + Rt``, or ``None`` if ``R ⊂ S`` is quadratic."""
    S = _as_sub(S)
    if not S.field.is_finite:
        raise InvalidPrecondition("the quadratic scan needs a finite field")
    P = S.parent
    for t in R.coset_representatives(S, projective=True, cap=cap):
        St = R.sum(Subspace(P, [P.mul(r, t) for r in R.rows]))
        if not St.contains(P.mul(t, t)):
            return t
    return None


def quadratic_check(R: Subalgebra, S, cap: int = DEFAULT_SCAN_CAP) -> bool:
    return quadratic_witness(R, S, cap) is None


def _residue_order(R: Subalgebra, M: Ideal) -> int | None:
    F = R.field
    return F.order ** (R.dim - M.dim) if F.is_finite else None


@dataclass
class ImplicationReport:
    """Hypotheses, computed facts and whether the stated implication holds
    (``None`` when it does not apply)."""

    name: str
    applicable: bool
    facts: dict
    holds: bool | None


def quadratic_pointwise_check(R: Subalgebra, S, cap: int = DEFAULT_SCAN_CAP) -> ImplicationReport:
    """Quadratic, seminormal, infra-integral, ``R`` local ⇒ pointwise minimal,
    and minimal when ``|k| > 2``."""
    S = _as_sub(S)
    maxR = maximal_ideals(R)
    facts: dict = {"local": len(maxR) == 1, "quadratic": quadratic_check(R, S, cap)}
    facts["seminormal"] = is_seminormal(R, S)
    facts["infra_integral"] = is_infra_integral(R, S)
    applicable = all(facts[k] for k in ("local", "quadratic", "seminormal", "infra_integral"))
    if not applicable:
        return ImplicationReport("quadratic", False, facts, None)
    k_order = _residue_order(R, maxR[0])
    pw_c = pw_minimal_by_characterization(R, S).value
    pw_d = pw_minimal_by_definition(R, S).value
    minimal, _ = _minimal_shortcut(R, S)
    facts.update({"k_order": k_order, "pw_characterization": pw_c, "pw_definition": pw_d,
                  "minimal": minimal})
    big_k = k_order is None or k_order > 2
    # only |k| > 2 => minimal is valid: F_2 ⊂ F_2² is minimal with |k| = 2
    facts["converse_holds"] = minimal == big_k
    holds = pw_c is True and pw_d is not False and (minimal or not big_k)
    return ImplicationReport("quadratic", True, facts, holds)


def fip_shortcut_check(R: Subalgebra, S) -> ImplicationReport:
    """Under FIP with ``|R/M|`` infinite or ``R ⊂ S`` t-closed: pointwise
    minimal iff minimal."""
    S = _as_sub(S)
    finite = S.field.is_finite
    tclosed = is_t_closed(R, S)
    if finite and not tclosed:
        raise InvalidPrecondition("needs a t-closed extension or an infinite residue field")
    pw = pw_minimal_by_characterization(R, S).value
    minimal, _ = _minimal_shortcut(R, S)
    facts = {"t_closed": tclosed, "fip": True if finite else None, "pw": pw, "minimal": minimal}
    if finite:
        facts["pw_definition"] = pw_minimal_by_definition(R, S).value
        holds = pw == minimal and facts["pw_definition"] == pw
    elif pw is False:
        holds = True
    else:
        holds = None
    return ImplicationReport("fip-shortcut", True, facts, holds)


def _two_square_zero_local(res: Residual) -> bool:
    """``S' ≅ k[X,Y]/(X², XY, Y²)``."""
    return res.subintegral and res.N.dim == 2 * res.k.dim and res.nil_square_zero()


def _split_cube(res: Residual) -> bool:
    if not (res.k_is_f2 and res.Q.dim == 3 and res.N.dim == 0):
        return False
    dec = local_decomposition(res.Q)
    return dec.count == 3 and all(d == 1 for d in dec.residue_dims)


def tower_equivalence_check(R: Subalgebra, T: Subalgebra, S, cap: int = DEFAULT_SCAN_CAP) -> ImplicationReport:
    """For ``R ⊂ T ⊂ S`` with both steps minimal, over a finite field: pointwise
    minimal, pointwise minimal pair, co-pointwise minimal and the residue
    condition agree, and then ``|[R,S]| > 3``."""
    S = _as_sub(S)
    if not (R.issubset(T) and T.issubset(S) and R.dim < T.dim < S.dim):
        raise InvalidPrecondition("needs a strict tower R ⊂ T ⊂ S")
    if not S.field.is_finite:
        raise InvalidPrecondition("FIP is only decided over finite fields")
    steps = [minimal_type(R, T).is_minimal, minimal_type(T, S).is_minimal]
    L = enumerate_interval(R, S, cap=cap)
    res = residual(R, S)
    cond = res is not None and (_two_square_zero_local(res) or _split_cube(res))
    facts = {
        "steps_minimal": steps,
        "pw": pw_minimal_by_characterization(R, S).value,
        "pair": pw_pair_by_characterization(R, S).value,
        "co_pw": co_pw_by_characterization(R, S).value,
        "residue_condition": cond,
        "node_count": L.node_count,
    }
    if not all(steps):
        return ImplicationReport("tower", False, facts, None)
    vals = [facts["pw"], facts["pair"], facts["co_pw"], cond]
    holds = len(set(vals)) == 1 and (not cond or L.node_count > 3)
    return ImplicationReport("tower", True, facts, holds)
