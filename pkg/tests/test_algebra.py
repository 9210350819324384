from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from ringlat.algebra import (
    Algebra,
    Ideal,
    Subalgebra,
    Subspace,
    adjoin,
    compositum,
    extension_from_json,
    extension_to_json,
    field_algebra,
    generated_subalgebra,
    is_ideal_of,
    monogenic_extension,
    product_algebra,
    quotient_algebra,
    split_algebra,
    truncated_poly_algebra,
)
from ringlat.errors import (
    BadUnit,
    FieldMismatch,
    NotAnIdeal,
    NotASubalgebra,
    NotAssociative,
    NotCommutative,
    ParentMismatch,
    ScanCapExceeded,
)
from ringlat.fields import GF, RF

from strategies import algebra_with_subalgebra, algebras, elements_of


@given(S=algebras())
def test_random_algebras_satisfy_the_axioms(S):
    S.validate()
    rng = random.Random(S.dim)
    a, b, c = elements_of(S, rng, 3)
    assert S.mul(a, b) == S.mul(b, a)
    assert S.mul(S.mul(a, b), c) == S.mul(a, S.mul(b, c))
    assert S.mul(S.unit, a) == a


@given(S=algebras())
def test_json_roundtrip(S):
    R = S.scalars()
    R2, S2 = extension_from_json(extension_to_json(R))
    assert S2 == S and R2.rows == R.rows


@given(pair=algebra_with_subalgebra())
def test_subalgebra_closure(pair):
    R, S = pair
    assert R.contains(S.unit)
    for i, a in enumerate(R.rows):
        for b in R.rows[i:]:
            assert R.contains(S.mul(a, b))


@given(pair=algebra_with_subalgebra(), seed=st.integers(0, 1000))
def test_adjoin_is_smallest(pair, seed):
    R, S = pair
    (x,) = elements_of(S, random.Random(seed), 1)
    T = adjoin(R, x)
    assert R.issubset(T) and T.contains(x)
    Subalgebra(S, T.rows)  # checked construction
    # every subalgebra containing R and x contains R[x]
    U = generated_subalgebra(R, [x, S.mul(x, x)])
    assert U == T


@given(pair=algebra_with_subalgebra(), seed=st.integers(0, 1000))
def test_intersection_and_compositum(pair, seed):
    R, S = pair
    x, y = elements_of(S, random.Random(seed), 2)
    A, B = adjoin(R, x), adjoin(R, y)
    C = compositum(A, B)
    M = A.intersection(B)
    assert A.issubset(C) and B.issubset(C)
    assert M.issubset(A) and M.issubset(B) and R.issubset(M)
    assert A.sum(B).dim + M.dim == A.dim + B.dim
    assert A.sum(B).issubset(C)


def test_constructors():
    F = GF(2)
    S = truncated_poly_algebra(F, 2)
    assert S.dim == 4 and S.names == ["1", "x1", "x2", "x1x2"]
    x1, x2 = S.gen(1), S.gen(2)
    assert (x1 * x1).is_zero() and not (x1 * x2).is_zero()
    T = truncated_poly_algebra(F, 3, "squares-and-products")
    assert T.dim == 4 and (T.gen(1) * T.gen(2)).is_zero()
    P, emb = product_algebra([split_algebra(F, 2), S])
    assert P.dim == 6 and len(emb) == 2
    P.validate()
    G = monogenic_extension(field_algebra(GF(3)), [1, 0, 1])  # x^2 + 1 is irreducible mod 3
    G.validate()
    x = G.gen(1)
    assert x * x == G.element([GF(3).from_int(2), 0])


def test_invalid_tables_are_rejected():
    F = GF(2)
    one, zero = F.one, F.zero
    # b0 * b1 != b1 * b0
    table = [[(one, zero), (zero, one)], [(one, zero), (zero, one)]]
    with pytest.raises(NotCommutative):
        Algebra(F, table)
    # unit does not act as identity
    table = [[(zero, zero), (zero, one)], [(zero, one), (zero, one)]]
    with pytest.raises(BadUnit):
        Algebra(F, table)
    # (b1*b1)*b2 = b2*b2 = 0 but b1*(b1*b2) = b1*b0 = b1
    e = lambda *c: tuple(F.from_int(x) for x in c)  # noqa: E731
    table = [
        [e(1, 0, 0), e(0, 1, 0), e(0, 0, 1)],
        [e(0, 1, 0), e(0, 0, 1), e(1, 0, 0)],
        [e(0, 0, 1), e(1, 0, 0), e(0, 0, 0)],
    ]
    with pytest.raises(NotAssociative):
        Algebra(F, table)
    with pytest.raises(ValueError):
        Algebra(F, [[(one,), (one,)]])


def test_subalgebra_and_ideal_validation():
    S = truncated_poly_algebra(GF(2), 2)
    with pytest.raises(NotASubalgebra):
        Subalgebra(S, [S.basis_vector(1)])
    with pytest.raises(NotASubalgebra):
        Subalgebra(S, [S.unit, S.basis_vector(1), S.basis_vector(2)])
    with pytest.raises(NotAnIdeal):
        Ideal(S.full(), [S.basis_vector(1)])
    I = Ideal(S.full(), [S.basis_vector(1), S.basis_vector(3)])
    assert is_ideal_of(I.space, S.full())
    Q, qm, _ = quotient_algebra(S, I)
    assert Q.dim == 2
    with pytest.raises(NotAnIdeal):
        quotient_algebra(S, S.full())
    other = truncated_poly_algebra(GF(2), 1)
    with pytest.raises(ParentMismatch):
        S.scalars().issubset(other.full())
    with pytest.raises(FieldMismatch):
        product_algebra([S, field_algebra(GF(3))])


def test_scan_cap():
    S = split_algebra(GF(3), 6)
    with pytest.raises(ScanCapExceeded):
        list(S.scalars().coset_representatives(S.full(), cap=100))


def test_coset_representatives_count():
    S = split_algebra(GF(3), 3)
    R = S.scalars()
    reps = list(R.coset_representatives(S.full()))
    assert len(reps) == 9
    proj = list(R.coset_representatives(S.full(), projective=True))
    assert len(proj) == (9 - 1) // 2


def test_rational_function_algebra():
    k = RF(GF(2))
    t = k.gen()
    K = monogenic_extension(field_algebra(k), [-t, 0, 1], var="y")
    K.validate()
    y = K.gen(1)
    assert y * y == K.element([t.value, k.zero])
    assert Subspace(K, [K.unit]).dim == 1
