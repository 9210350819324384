"""The lattice ``[R, S]`` of intermediate subalgebras over a finite field.

Every ``U`` in ``[R, S]`` is a compositum of monogenic extensions, so the
interval is reached from ``R`` by repeatedly adjoining single elements.  For
a node ``T`` the set ``E(T) = {T[x] : x in S \\ T}`` is computed from
projective coset representatives of ``T`` in ``S``; its minimal elements are
exactly the upper covers of ``T``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Iterator

from .algebra import (
    DEFAULT_SCAN_CAP,
    Algebra,
    Subalgebra,
    adjoin,
    generated_subalgebra,
)
from .errors import InvalidPrecondition, NodeCapExceeded, TooManyAtoms

DEFAULT_NODE_CAP = 100_000
MAX_INDEPENDENT_ATOMS = 20


def _sort_key(T: Subalgebra):
    return (T.dim, T.rows)


@dataclass
class IntervalLattice:
    R: Subalgebra
    S: Subalgebra
    nodes: list[Subalgebra]
    index: dict
    extensions: list[frozenset]
    upper: list[tuple[int, ...]]
    lower: list[tuple[int, ...]] = dc_field(default_factory=list)
    _join: dict = dc_field(default_factory=dict, repr=False)
    _meet: dict = dc_field(default_factory=dict, repr=False)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(len(self.nodes)) for j in self.upper[i]]

    def idx(self, T: Subalgebra) -> int:
        return self.index[T.rows]

    def leq(self, i: int, j: int) -> bool:
        return self.nodes[i].issubset(self.nodes[j])

    def covers(self, i: int, j: int) -> bool:
        """``j`` covers ``i`` (``nodes[i] ⊂ nodes[j]`` is a minimal step)."""
        return j in self.upper[i]

    def join(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key not in self._join:
            if self.leq(i, j):
                self._join[key] = j
            elif self.leq(j, i):
                self._join[key] = i
            else:
                T = generated_subalgebra(self.nodes[i], self.nodes[j].rows)
                self._join[key] = self.index[T.rows]
        return self._join[key]

    def join_all(self, ids) -> int:
        acc = self.bottom
        for i in ids:
            acc = self.join(acc, i)
        return acc

    def meet(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        if key not in self._meet:
            V = self.nodes[i].intersection(self.nodes[j])
            self._meet[key] = self.index[V.rows]
        return self._meet[key]

    def is_pointwise_at(self, i: int) -> bool:
        """``nodes[i] ⊂ nodes[i][x]`` is minimal for every ``x`` outside: the
        one-step extensions of the node are pairwise incomparable."""
        return set(self.extensions[i]) == set(self.upper[i])


def enumerate_interval(R: Subalgebra, S=None, cap: int = DEFAULT_SCAN_CAP,
                       node_cap: int = DEFAULT_NODE_CAP) -> IntervalLattice:
    """All subalgebras between ``R`` and ``S`` with their Hasse diagram."""
    if S is None:
        S = R.parent.full()
    elif isinstance(S, Algebra):
        S = S.full()
    if not R.issubset(S):
        raise InvalidPrecondition("R is not contained in S")
    found: dict = {R.rows: R}
    ext_keys: dict = {}
    queue = [R]
    head = 0
    while head < len(queue):
        T = queue[head]
        head += 1
        exts = set()
        if T.dim < S.dim:
            for x in T.coset_representatives(S, projective=True, cap=cap):
                U = adjoin(T, x)
                exts.add(U.rows)
                if U.rows not in found:
                    found[U.rows] = U
                    queue.append(U)
                    if len(found) > node_cap:
                        raise NodeCapExceeded(f"more than {node_cap} intermediate subalgebras")
        ext_keys[T.rows] = exts
    nodes = sorted(found.values(), key=_sort_key)
    index = {T.rows: i for i, T in enumerate(nodes)}
    extensions = [frozenset(index[k] for k in ext_keys[T.rows]) for T in nodes]
    upper = []
    for i, T in enumerate(nodes):
        ex = sorted(extensions[i])
        minimal = [j for j in ex if not any(k != j and nodes[k].dim < nodes[j].dim and nodes[k].issubset(nodes[j]) for k in ex)]
        upper.append(tuple(minimal))
    lower: list[list[int]] = [[] for _ in nodes]
    for i, ups in enumerate(upper):
        for j in ups:
            lower[j].append(i)
    return IntervalLattice(R, S, nodes, index, extensions, upper, [tuple(sorted(l)) for l in lower])


# ---------------------------------------------------------------------------
# statistics
# ---------------------------------------------------------------------------


def atoms(L: IntervalLattice) -> list[int]:
    return list(L.upper[L.bottom])


def coatoms(L: IntervalLattice) -> list[int]:
    return list(L.lower[L.top])


def length(L: IntervalLattice) -> int:
    """Longest chain from bottom to top in the Hasse diagram."""
    best = [0] * L.node_count
    for i in range(L.node_count - 1, -1, -1):
        ups = L.upper[i]
        best[i] = 1 + max(best[j] for j in ups) if ups else 0
    return best[L.bottom]


def height(L: IntervalLattice, i: int) -> int:
    """Longest chain from bottom to node ``i``."""
    best = [-1] * L.node_count
    best[L.bottom] = 0
    for a in range(L.node_count):
        if best[a] < 0:
            continue
        for b in L.upper[a]:
            best[b] = max(best[b], best[a] + 1)
    return best[i]


def maximal_chain_lengths(L: IntervalLattice) -> Counter:
    """Multiset of lengths of all maximal chains from bottom to top."""
    memo: list[Counter | None] = [None] * L.node_count
    for i in range(L.node_count - 1, -1, -1):
        ups = L.upper[i]
        if not ups:
            memo[i] = Counter({0: 1})
            continue
        c: Counter = Counter()
        for j in ups:
            for ln, cnt in memo[j].items():
                c[ln + 1] += cnt
        memo[i] = c
    return memo[L.bottom]


def maximal_chains(L: IntervalLattice, start: int | None = None) -> Iterator[list[int]]:
    """All maximal chains (as node-index lists) from ``start`` to the top."""
    start = L.bottom if start is None else start

    def rec(i, path):
        if not L.upper[i]:
            yield list(path)
            return
        for j in L.upper[i]:
            path.append(j)
            yield from rec(j, path)
            path.pop()

    yield from rec(start, [start])


def is_semimodular(L: IntervalLattice) -> tuple[bool, tuple[int, int] | None]:
    """If ``T1, T2`` both cover their meet, both must be covered by the join."""
    for m in range(L.node_count):
        ups = L.upper[m]
        for a, b in itertools.combinations(ups, 2):
            j = L.join(a, b)
            if not (L.covers(a, j) and L.covers(b, j)):
                return False, (a, b)
    return True, None


def is_atomistic(L: IntervalLattice) -> tuple[bool, int | None]:
    """Every node is the compositum of the atoms it contains."""
    ats = atoms(L)
    for i, T in enumerate(L.nodes):
        inside = [a for a in ats if L.nodes[a].issubset(T)]
        if L.join_all(inside) != i:
            return False, i
    return True, None


def is_geometric(L: IntervalLattice) -> tuple[bool, object]:
    ok, w = is_semimodular(L)
    if not ok:
        return False, ("not semimodular", w)
    ok, w = is_atomistic(L)
    if not ok:
        return False, ("not atomistic", w)
    return True, None


def is_independent(L: IntervalLattice, atom_set) -> bool:
    """``T_J ∩ T_K = T_{J∩K}`` for all subsets ``J, K`` of the atom set."""
    I = sorted(set(atom_set))
    if len(I) > MAX_INDEPENDENT_ATOMS:
        raise TooManyAtoms(f"{len(I)} atoms exceed the limit {MAX_INDEPENDENT_ATOMS}")
    n = len(I)
    comp = {}
    for mask in range(1 << n):
        comp[mask] = L.join_all(I[b] for b in range(n) if mask >> b & 1)
    for J in range(1 << n):
        for K in range(J, 1 << n):
            if L.meet(comp[J], comp[K]) != comp[J & K]:
                return False
    return True


def minimal_spanning_independent(L: IntervalLattice, search_cap: int = 200_000) -> list[int]:
    """A minimum-size independent set of atoms whose compositum is the top.

    Greedy choice of atoms not yet inside the running compositum gives a
    spanning set; a bounded search over smaller subsets confirms minimality.
    Raises ``ValueError`` if no independent spanning set is found."""
    ats = atoms(L)
    if L.node_count == 1:
        return []
    greedy: list[int] = []
    acc = L.bottom
    for a in ats:
        if not L.leq(a, acc):
            greedy.append(a)
            acc = L.join(acc, a)
            if acc == L.top:
                break
    if acc != L.top:
        raise ValueError("atoms do not span the interval")
    lower_bound = 1
    best = None
    for size in range(lower_bound, len(greedy) + 1):
        checked = 0
        for combo in itertools.combinations(ats, size):
            checked += 1
            if checked > search_cap:
                break
            if L.join_all(combo) == L.top and (size > MAX_INDEPENDENT_ATOMS or is_independent(L, combo)):
                best = list(combo)
                break
        if best is not None:
            break
    if best is None:
        if len(greedy) <= MAX_INDEPENDENT_ATOMS and is_independent(L, greedy):
            best = greedy
        else:
            raise ValueError("no independent spanning atom set found")
    return best


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def to_dot(L: IntervalLattice, with_basis: bool = False) -> str:
    P = L.S.parent
    lines = ["digraph interval {", "  rankdir=BT;", "  node [shape=box];"]
    for i, T in enumerate(L.nodes):
        label = f"#{i} dim {T.dim}"
        if with_basis:
            label += "\\n" + "\\n".join(P.format(r) for r in T.rows)
        lines.append(f'  n{i} [label="{label}"];')
    for i, j in L.edges():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(L: IntervalLattice) -> dict:
    F = L.S.field
    return {
        "node_count": L.node_count,
        "nodes": [
            {"dim": T.dim, "basis": [[F.encode(c) for c in r] for r in T.rows]} for T in L.nodes
        ],
        "edges": [list(e) for e in L.edges()],
        "atoms": atoms(L),
        "coatoms": coatoms(L),
        "length": length(L),
    }
