from __future__ import annotations

import itertools

import pytest
from hypothesis import given

from ringlat.algebra import (
    field_algebra,
    monogenic_extension,
    product_algebra,
    split_algebra,
    truncated_poly_algebra,
)
from ringlat.fields import GF, RF, find_irreducible, FieldScalar
from ringlat.ringstruct import (
    conductor,
    crucial_report,
    ideal_generated,
    is_local,
    is_reduced,
    is_unit,
    local_decomposition,
    maximal_ideals,
    min_poly,
    nilradical,
    radical_in,
    residue_field,
)

from strategies import algebra_with_subalgebra, algebras


def _brute_nilpotents(S) -> int:
    count = 0
    for v in S.elements():
        x = v
        for _ in range(S.dim):
            x = S.mul(x, v)
        count += all(c == S.field.zero for c in x)
    return count


def _brute_idempotents(S) -> int:
    return sum(S.mul(v, v) == v for v in S.elements())


@given(S=algebras())
def test_nilradical_matches_brute_force(S):
    N = nilradical(S)
    assert S.field.order ** N.dim == _brute_nilpotents(S)


@given(S=algebras())
def test_local_factors_match_idempotent_count(S):
    dec = local_decomposition(S)
    assert 2 ** dec.count == _brute_idempotents(S)
    assert len(maximal_ideals(S)) == dec.count


@given(S=algebras())
def test_residue_fields_are_fields(S):
    for M in maximal_ideals(S):
        Q, proj = residue_field(S.full(), M)
        assert all(is_unit(v, Q) for v in Q.elements() if any(c != Q.field.zero for c in v))


@given(pair=algebra_with_subalgebra())
def test_conductor_matches_brute_force(pair):
    R, S = pair
    C = conductor(R, S)
    brute = [v for v in S.elements()
             if all(R.contains(S.mul(v, S.basis_vector(i))) for i in range(S.dim))]
    assert S.field.order ** C.dim == len(brute)
    assert all(C.contains(v) for v in brute)


@given(pair=algebra_with_subalgebra())
def test_crucial_ideal_is_radical_of_conductor(pair):
    R, S = pair
    rep = crucial_report(R, S)
    if len(rep.msupp) == 1:
        assert rep.crucial.space == radical_in(R, rep.conductor).space


def test_known_structures():
    F = GF(2)
    assert is_local(truncated_poly_algebra(F, 3))
    assert not is_reduced(truncated_poly_algebra(F, 1))
    assert is_reduced(split_algebra(F, 3))
    assert len(maximal_ideals(split_algebra(F, 4))) == 4
    f = [FieldScalar(F, c) for c in find_irreducible(F, 3)]
    K = monogenic_extension(field_algebra(F), f)
    assert is_local(K) and nilradical(K).dim == 0


def test_min_poly():
    F = GF(3)
    S = truncated_poly_algebra(F, 1)
    x = S.basis_vector(1)
    assert min_poly(S, x) == (F.zero, F.zero, F.one)
    e = split_algebra(F, 2).basis_vector(0)
    assert min_poly(split_algebra(F, 2), e) == (F.zero, F.neg(F.one), F.one)


def test_ideal_generated():
    S = truncated_poly_algebra(GF(2), 2)
    I = ideal_generated(S.full(), [S.basis_vector(1)])
    assert I.dim == 2


def test_rational_function_decomposition():
    k = RF(GF(2))
    t = k.gen()
    S = monogenic_extension(field_algebra(k), [-t, 0, 1])
    # y^2 = t is irreducible and purely inseparable: a local field
    dec = local_decomposition(S)
    assert dec.count == 1 and nilradical(S).dim == 0
    T = monogenic_extension(field_algebra(k), [0, 0, 1])
    assert nilradical(T).dim == 1
    P, _ = product_algebra([field_algebra(k), field_algebra(k)])
    assert local_decomposition(P).count == 2
