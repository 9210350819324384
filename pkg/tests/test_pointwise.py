from __future__ import annotations

import pytest
from hypothesis import given

from ringlat import catalog
from ringlat.algebra import Subalgebra, Subspace, adjoin, split_algebra, truncated_poly_algebra
from ringlat.errors import InvalidPrecondition, PreconditionFailed
from ringlat.fields import GF
from ringlat.lattice import enumerate_interval
from ringlat.pointwise import (
    CO_PW,
    PW_EXTENSION,
    PW_PAIR,
    case_label,
    co_pw_by_characterization,
    co_pw_by_definition,
    fip_shortcut_check,
    jacobson_builder,
    jacobson_square_check,
    length_dimension_check,
    pointwise_verdicts,
    pw_minimal_by_characterization,
    pw_minimal_by_definition,
    pw_pair_by_characterization,
    pw_pair_by_definition,
    quadratic_check,
    quadratic_pointwise_check,
    quadratic_witness,
    tower_equivalence_check,
)

from strategies import extensions


@given(inst=extensions())
def test_dual_oracles_agree(inst):
    R, S = inst
    L = enumerate_interval(R, S)
    for prop, v in pointwise_verdicts(R, S, lattice=L).items():
        assert v.agree is True, (prop, v)


@given(inst=extensions())
def test_implications_between_properties(inst):
    R, S = inst
    pw = pw_minimal_by_characterization(R, S).value
    pair = pw_pair_by_characterization(R, S).value
    copw = co_pw_by_characterization(R, S).value
    assert not pair or pw
    assert not copw or pair


@pytest.mark.parametrize(
    "name,case",
    [("ex1(m=2)", "(a)"), ("ex2(m=3)", "(a)"), ("split(n=3,q=2)", "(b)"), ("split(n=4,q=2)", "(b)"),
     ("ex3-two-var", "(c)"), ("ex5", "(d)")],
)
def test_case_labels(name, case):
    e = catalog.get(name)
    assert case_label(e.R, e.top) == case


def test_case_label_needs_a_non_minimal_pointwise_minimal_extension():
    e = catalog.get("split(n=3,q=3)")
    with pytest.raises(InvalidPrecondition):
        case_label(e.R, e.top)
    e = catalog.get("split(n=2,q=2)")
    with pytest.raises(InvalidPrecondition):
        case_label(e.R, e.top)


@pytest.mark.parametrize(
    "name,clause,lhs,rhs",
    [
        ("ex2(m=3)", "infra-integral", 4, 4),
        ("split(n=3,q=2)", "infra-integral", 3, 3),
        ("ff(q=2,e=3)", "t-closed minimal", 1, 1),
        ("ex3-two-var", "t-closed", 4, 4),
        ("ex5", "mixed", 4, 4),
    ],
)
def test_length_dimension(name, clause, lhs, rhs):
    e = catalog.get(name)
    rep = length_dimension_check(e.R, e.top)
    assert (rep.clause, rep.lhs, rep.rhs) == (clause, lhs, rhs)
    assert rep.holds


def test_definition_side_witnesses():
    e = catalog.get("split(n=3,q=3)")
    side = pw_minimal_by_definition(e.R, e.top)
    assert side.value is False and side.witness is not None
    assert adjoin(e.R, side.witness).dim == 3
    e = catalog.get("ex2(m=3)")
    side = co_pw_by_definition(e.R, e.top)
    assert side.value is False and side.clause == "R[x] ⊂ S is not minimal"
    e = catalog.get("ex1(m=2)")
    side = pw_pair_by_definition(e.R, e.top)
    assert side.value is False and isinstance(side.witness, Subspace)


def test_sampled_definition_refutes_remark_example():
    e = catalog.get("remark7151")
    side = pw_minimal_by_definition(e.R, e.top, budget=20)
    assert side.value is False and side.method == "sampled"
    assert pw_minimal_by_characterization(e.R, e.top).value is False


def test_sampled_definition_never_certifies():
    e = catalog.get("ex5")
    assert pw_minimal_by_definition(e.R, e.top, budget=20).value is None


def test_jacobson_square_and_builder():
    S = truncated_poly_algebra(GF(2), 3)
    k = S.scalars()
    assert jacobson_square_check(k, S.full()) is True
    J = Subspace(S, [S.basis_vector(i) for i in range(1, S.dim)])
    built = jacobson_builder(k, S, J)
    assert built.by_characterization.value is True and built.by_definition.value is True
    assert built.T.dim == S.dim
    with pytest.raises(PreconditionFailed) as exc:
        jacobson_builder(k, S, Subspace(S, [S.basis_vector(1)]))
    assert exc.value.clause == "J-ideal"
    S3 = truncated_poly_algebra(GF(3), 2)
    J3 = Subspace(S3, [S3.basis_vector(i) for i in range(1, 4)])
    with pytest.raises(PreconditionFailed) as exc:
        jacobson_builder(S3.scalars(), S3, J3)
    assert exc.value.clause == "J-squares"
    with pytest.raises(PreconditionFailed) as exc:
        jacobson_builder(k, S, [])
    assert exc.value.clause == "J-not-in-R"


def test_jacobson_needs_local_base():
    S = split_algebra(GF(2), 3)
    R = Subalgebra(S, [S.unit, S.basis_vector(0)])
    with pytest.raises(PreconditionFailed) as exc:
        jacobson_square_check(R, S)
    assert exc.value.clause in ("R-local", "conductor-maximal")


def test_quadratic_examples():
    for n in (2, 3, 4):
        S = split_algebra(GF(2), n)
        assert quadratic_check(S.scalars(), S)
    S = split_algebra(GF(3), 3)
    w = quadratic_witness(S.scalars(), S)
    assert w is not None
    T = truncated_poly_algebra(GF(2), 1)
    from ringlat.algebra import monogenic_extension, field_algebra

    cube = monogenic_extension(field_algebra(GF(2)), [0, 0, 0, 1])
    assert not quadratic_check(cube.scalars(), cube)
    assert quadratic_check(T.scalars(), T)


def test_quadratic_pointwise_implication():
    rep = quadratic_pointwise_check(*_ext("split(n=3,q=2)"))
    assert rep.applicable and rep.holds and rep.facts["minimal"] is False
    rep = quadratic_pointwise_check(*_ext("split(n=2,q=4)"))
    assert rep.applicable and rep.holds and rep.facts["minimal"] is True
    # minimal although |k| = 2: only the direction |k| > 2 => minimal holds
    rep = quadratic_pointwise_check(*_ext("split(n=2,q=2)"))
    assert rep.holds and rep.facts["converse_holds"] is False


def test_fip_shortcut():
    rep = fip_shortcut_check(*_ext("ff(q=2,e=4)"))
    assert rep.holds and rep.facts["pw"] is False
    rep = fip_shortcut_check(*_ext("ff(q=3,e=2)"))
    assert rep.holds and rep.facts["pw"] is True
    with pytest.raises(InvalidPrecondition):
        fip_shortcut_check(*_ext("split(n=3,q=2)"))
    rep = fip_shortcut_check(*_ext("ex5"))
    assert rep.facts["fip"] is None


def _ext(name):
    e = catalog.get(name)
    return e.R, e.top


@pytest.mark.parametrize("name,expected", [("ex2(m=2)", True), ("split(n=3,q=2)", True), ("ex1(m=2)", None)])
def test_two_step_towers(name, expected):
    e = catalog.get(name)
    S = e.top
    mid = adjoin(e.R, S.parent.basis_vector(1))
    rep = tower_equivalence_check(e.R, mid, S)
    assert rep.holds is expected
    if expected:
        assert rep.facts["residue_condition"] and rep.facts["node_count"] > 3


def test_tower_requires_a_strict_finite_tower():
    e = catalog.get("split(n=3,q=2)")
    with pytest.raises(InvalidPrecondition):
        tower_equivalence_check(e.R, e.R, e.top)
    e = catalog.get("ex5")
    mid = adjoin(e.R, e.elements["y"])
    with pytest.raises(InvalidPrecondition):
        tower_equivalence_check(e.R, mid, e.top)


def test_verdict_json_is_serializable():
    import json

    e = catalog.get("split(n=3,q=3)")
    vs = pointwise_verdicts(e.R, e.top)
    text = json.dumps({k: v.to_json(e.S.field) for k, v in vs.items()})
    assert PW_EXTENSION in text and PW_PAIR in text and CO_PW in text
