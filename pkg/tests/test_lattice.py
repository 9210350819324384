from __future__ import annotations

import itertools
import json
import random

import pytest
from hypothesis import given, strategies as st

from ringlat import catalog
from ringlat.algebra import Subalgebra, Subspace, split_algebra, truncated_poly_algebra
from ringlat.canon import minimal_oracle
from ringlat.errors import InvalidPrecondition, NodeCapExceeded, TooManyAtoms
from ringlat.fields import GF
from ringlat.harness import Profile
from ringlat.lattice import (
    atoms,
    coatoms,
    enumerate_interval,
    height,
    is_atomistic,
    is_geometric,
    is_independent,
    is_semimodular,
    length,
    maximal_chain_lengths,
    maximal_chains,
    minimal_spanning_independent,
    to_dot,
    to_json,
)

from strategies import extensions


def bell(n: int) -> int:
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


def gaussian(m: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_split_lattices_are_partition_lattices(n, q):
    S = split_algebra(GF(q), n)
    L = enumerate_interval(S.scalars(), S)
    assert L.node_count == bell(n)
    assert len(atoms(L)) == 2 ** (n - 1) - 1
    assert len(coatoms(L)) == n * (n - 1) // 2
    assert length(L) == n - 1


def test_split_five():
    S = split_algebra(GF(2), 5)
    L = enumerate_interval(S.scalars(), S)
    assert L.node_count == bell(5) == 52
    assert is_semimodular(L)[0] is False


@pytest.mark.parametrize("m,q", [(2, 2), (3, 2), (2, 3), (4, 2)])
def test_square_zero_lattices_are_subspace_lattices(m, q):
    S = truncated_poly_algebra(GF(q), m, "squares-and-products")
    L = enumerate_interval(S.scalars(), S)
    assert L.node_count == sum(gaussian(m, k, q) for k in range(m + 1))
    assert length(L) == m
    assert is_geometric(L)[0]
    counts = maximal_chain_lengths(L)
    assert set(counts) == {m}


@pytest.mark.parametrize("e,nodes,ell", [(4, 3, 2), (6, 4, 2), (3, 2, 1), (8, 4, 3)])
def test_finite_field_lattices_are_divisor_lattices(e, nodes, ell):
    L = enumerate_interval(catalog.ff(2, e).R, catalog.ff(2, e).top)
    assert L.node_count == nodes and length(L) == ell


def _brute_subalgebras(R, S):
    """All subspaces of dim ≤ 3 spanned by at most three elements, filtered."""
    P = S.parent
    found = set()
    elems = list(S.elements())
    for k in range(0, 4):
        for gens in itertools.combinations(elems, k):
            V = Subspace(P, list(R.rows) + list(gens))
            try:
                T = Subalgebra(P, _rref=(V.rows, V.pivots))
            except Exception:
                continue
            found.add(T.rows)
    return found


@given(inst=extensions(Profile((2, 3), 3)))
def test_enumeration_matches_brute_force(inst):
    R, S = inst
    L = enumerate_interval(R, S)
    assert {T.rows for T in L.nodes} == _brute_subalgebras(R, S.full())


@given(inst=extensions())
def test_hasse_edges_are_minimal_steps(inst):
    R, S = inst
    L = enumerate_interval(R, S)
    for i, j in L.edges():
        assert minimal_oracle(L.nodes[i], L.nodes[j])
    assert L.nodes[L.bottom] == R and L.nodes[L.top].dim == S.dim


@given(inst=extensions(), seed=st.integers(0, 100))
def test_join_and_meet_are_lattice_operations(inst, seed):
    R, S = inst
    L = enumerate_interval(R, S)
    rng = random.Random(seed)
    for _ in range(10):
        a, b = rng.randrange(L.node_count), rng.randrange(L.node_count)
        j, m = L.join(a, b), L.meet(a, b)
        assert L.leq(a, j) and L.leq(b, j) and L.leq(m, a) and L.leq(m, b)
        # absorption
        assert L.join(a, L.meet(a, b)) == a and L.meet(a, L.join(a, b)) == a


@given(inst=extensions())
def test_chain_statistics_are_consistent(inst):
    R, S = inst
    L = enumerate_interval(R, S)
    counts = maximal_chain_lengths(L)
    chains = list(maximal_chains(L))
    assert sum(counts.values()) == len(chains)
    assert max(counts) == length(L) == height(L, L.top)


def test_independence():
    S = split_algebra(GF(2), 3)
    L = enumerate_interval(S.scalars(), S)
    a = atoms(L)
    assert is_independent(L, a[:2])
    assert not is_independent(L, a)
    I = minimal_spanning_independent(L)
    assert len(I) == 2
    with pytest.raises(TooManyAtoms):
        is_independent(L, range(21))


@pytest.mark.parametrize(
    "name,atomistic,geometric",
    [("ex1(m=2)", True, False), ("split(n=3,q=2)", True, True), ("split(n=4,q=2)", True, False),
     ("ex2(m=3)", True, True), ("ff(q=2,e=4)", False, False)],
)
def test_atomistic_and_geometric_flags(name, atomistic, geometric):
    e = catalog.get(name)
    L = enumerate_interval(e.R, e.top)
    assert is_atomistic(L)[0] is atomistic
    assert is_geometric(L)[0] is geometric


def test_caps_and_preconditions():
    S = split_algebra(GF(2), 5)
    with pytest.raises(NodeCapExceeded):
        enumerate_interval(S.scalars(), S, node_cap=10)
    with pytest.raises(InvalidPrecondition):
        enumerate_interval(S.full(), S.scalars())


def test_exports_are_deterministic():
    S = split_algebra(GF(2), 3)
    a = enumerate_interval(S.scalars(), S)
    b = enumerate_interval(S.scalars(), S)
    assert to_dot(a) == to_dot(b)
    assert json.dumps(to_json(a)) == json.dumps(to_json(b))
    assert to_dot(a).count("->") == 6
    minimal = split_algebra(GF(2), 2)
    assert to_dot(enumerate_interval(minimal.scalars(), minimal)).count("[label=") == 2
