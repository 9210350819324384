from __future__ import annotations

import pytest
from hypothesis import given

from ringlat.algebra import (
    Subalgebra,
    field_algebra,
    monogenic_extension,
    product_algebra,
    split_algebra,
    truncated_poly_algebra,
)
from ringlat.canon import (
    DECOMPOSED,
    INERT,
    NOT_MINIMAL,
    RAMIFIED,
    canonical_chain,
    is_infra_integral,
    is_seminormal,
    is_subintegral,
    is_t_closed,
    minimal_oracle,
    minimal_oracle_witness,
    minimal_type,
    profile_matches_classification,
    seminormalization,
    t_closure,
    tower_type_profile,
)
from ringlat.errors import InvalidPrecondition, NotAMinimalStep
from ringlat.fields import GF, RF, FieldScalar, find_irreducible
from ringlat.lattice import enumerate_interval, maximal_chains

from strategies import extensions


def _ff(q_p, q_f, e):
    F = GF(q_p, q_f)
    coeffs = [FieldScalar(F, c) for c in find_irreducible(F, e)]
    return monogenic_extension(field_algebra(F), coeffs)


@pytest.mark.parametrize(
    "S,kind",
    [
        (split_algebra(GF(2), 2), DECOMPOSED),
        (split_algebra(GF(5), 2), DECOMPOSED),
        (truncated_poly_algebra(GF(3), 1), RAMIFIED),
        (_ff(2, 1, 2), INERT),
        (_ff(2, 1, 3), INERT),
        (_ff(3, 1, 2), INERT),
        (_ff(2, 2, 2), INERT),
        (_ff(2, 1, 4), NOT_MINIMAL),
        (split_algebra(GF(2), 3), NOT_MINIMAL),
        (monogenic_extension(field_algebra(GF(2)), [0, 0, 0, 1]), NOT_MINIMAL),
    ],
)
def test_minimal_types_over_the_base_field(S, kind):
    assert minimal_type(S.scalars(), S).kind == kind
    assert minimal_oracle(S.scalars(), S) == (kind != NOT_MINIMAL)


@given(inst=extensions())
def test_minimal_type_agrees_with_the_element_oracle(inst):
    R, S = inst
    assert minimal_type(R, S).is_minimal == minimal_oracle(R, S)


@given(inst=extensions())
def test_closure_methods_agree(inst):
    R, S = inst
    a = canonical_chain(R, S, method="structural")
    b = canonical_chain(R, S, method="elementwise")
    assert a.plus == b.plus and a.t == b.t
    assert a.R.issubset(a.plus) and a.plus.issubset(a.t)


@given(inst=extensions())
def test_predicates_are_consistent(inst):
    R, S = inst
    sub, infra = is_subintegral(R, S), is_infra_integral(R, S)
    semi, tcl = is_seminormal(R, S), is_t_closed(R, S)
    assert not sub or infra
    assert not tcl or semi
    assert not (sub and semi)


@given(inst=extensions())
def test_tower_profiles_match_classification(inst):
    R, S = inst
    L = enumerate_interval(R, S)
    if L.node_count > 40:
        return
    for chain in list(maximal_chains(L))[:30]:
        prof = tower_type_profile([L.nodes[i] for i in chain])
        assert all(profile_matches_classification(R, S, prof).values())


def test_closures_on_a_product():
    F = GF(2)
    S, _ = product_algebra([truncated_poly_algebra(F, 1), field_algebra(F)])
    R = S.scalars()
    plus, flag = seminormalization(R, S)
    assert plus.dim == 2 and flag == "exhaustive"
    t, _ = t_closure(R, S)
    assert t.dim == 3
    assert not is_subintegral(R, S) and is_infra_integral(R, S)


def test_tower_profile_rejects_non_minimal_steps():
    S = split_algebra(GF(2), 3)
    with pytest.raises(NotAMinimalStep):
        tower_type_profile([S.scalars(), S.full()])
    with pytest.raises(InvalidPrecondition):
        minimal_type(S.full(), S)


def test_rational_function_minimal_types():
    k = RF(GF(2))
    t = k.gen()
    K = monogenic_extension(field_algebra(k), [-t, 0, 1])
    assert minimal_type(K.scalars(), K).kind == INERT
    F = RF(RF(GF(2), "t1"), "t2")
    t2 = F.gen()
    t1 = FieldScalar(F, F.embed(F.base.gen().value))
    K1 = monogenic_extension(field_algebra(F), [-t1, 0, 1], var="y1")
    S = monogenic_extension(K1, [-t2, 0, 1], var="y2")
    assert minimal_type(S.scalars(), S).kind == NOT_MINIMAL
    verdict, x, U = minimal_oracle_witness(S.scalars(), S, budget=50)
    assert verdict is False and 1 < U.dim < S.dim


def test_oracle_on_rational_functions_cannot_certify_minimality():
    k = RF(GF(2))
    t = k.gen()
    K = monogenic_extension(field_algebra(k), [-t, 0, 1])
    assert minimal_oracle(K.scalars(), K, budget=20) is None
