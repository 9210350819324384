"""Finite-dimensional commutative unital algebras given by structure constants.

Coordinates are tuples of raw field values (see :mod:`ringlat.fields`).
:class:`Subspace` keeps its basis in reduced row echelon form, so equal
subspaces have equal ``key``s and lattice nodes deduplicate by hashing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import linalg
from .errors import (
    BadUnit,
    FieldMismatch,
    InfiniteField,
    NotAnIdeal,
    NotASubalgebra,
    NotAssociative,
    NotCommutative,
    ParentMismatch,
    ScanCapExceeded,
)
from .fields import Field, FieldScalar, PrimeField, field_from_descriptor

DEFAULT_SCAN_CAP = 1 << 20


class Algebra:
    """Commutative unital algebra over ``field`` with ``table[i][j] = b_i * b_j``."""

    def __init__(self, field: Field, table, unit=None, names=None, check: bool = True):
        self.field = F = field
        n = len(table)
        if n < 1:
            raise ValueError("an algebra needs dimension at least 1")
        self.dim = n
        self.table = tuple(tuple(tuple(v) for v in row) for row in table)
        for row in self.table:
            if len(row) != n or any(len(v) != n for v in row):
                raise ValueError("multiplication table must be dim x dim x dim")
        self.unit = tuple(unit) if unit is not None else linalg.unit_vector(F, n, 0)
        if len(self.unit) != n:
            raise ValueError("unit vector has the wrong length")
        self.names = list(names) if names is not None else [f"b{i}" for i in range(n)]
        zero = F.zero
        self._sparse = [
            [[(k, c) for k, c in enumerate(self.table[i][j]) if c != zero] for j in range(n)]
            for i in range(n)
        ]
        self._prime = isinstance(F, PrimeField)
        self._key = None
        self._cache: dict = {}
        if check:
            self.validate()

    # identity -------------------------------------------------------------
    def key(self):
        if self._key is None:
            self._key = (self.field.key(), self.table, self.unit)
        return self._key

    def __eq__(self, other):
        return isinstance(other, Algebra) and (self is other or self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Algebra({self.field!r}, dim={self.dim})"

    # arithmetic on coordinate tuples ----------------------------------------
    def mul(self, a, b) -> tuple:
        n = self.dim
        F = self.field
        sparse = self._sparse
        if self._prime:
            p = F.p
            acc = [0] * n
            nb = [(j, y) for j, y in enumerate(b) if y]
            for i, x in enumerate(a):
                if not x:
                    continue
                row = sparse[i]
                for j, y in nb:
                    c = x * y
                    for k, t in row[j]:
                        acc[k] += c * t
            return tuple(v % p for v in acc)
        zero = F.zero
        add, fmul = F.add, F.mul
        acc = [zero] * n
        nb = [(j, y) for j, y in enumerate(b) if y != zero]
        for i, x in enumerate(a):
            if x == zero:
                continue
            row = sparse[i]
            for j, y in nb:
                c = fmul(x, y)
                for k, t in row[j]:
                    acc[k] = add(acc[k], fmul(c, t))
        return tuple(acc)

    def power(self, a, e: int) -> tuple:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result, base = self.unit, tuple(a)
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def add(self, a, b) -> tuple:
        return self.field.vadd(a, b)

    def sub(self, a, b) -> tuple:
        return self.field.vsub(a, b)

    def scale(self, c, a) -> tuple:
        return self.field.scale(c, a)

    def scalar(self, c) -> tuple:
        """The element ``c * 1``."""
        return self.field.scale(c, self.unit)

    def zero_vector(self) -> tuple:
        return linalg.zero_vector(self.field, self.dim)

    def basis_vector(self, i: int) -> tuple:
        return linalg.unit_vector(self.field, self.dim, i)

    def mult_matrix_rows(self, a) -> list[tuple]:
        """Rows ``a * b_j``; the span is the principal ideal ``aS``."""
        return [self.mul(a, self.basis_vector(j)) for j in range(self.dim)]

    def frob(self, a) -> tuple:
        return self.power(a, self.field.p)

    # validation ---------------------------------------------------------------
    def validate(self) -> None:
        n, t = self.dim, self.table
        for i in range(n):
            for j in range(i + 1, n):
                if t[i][j] != t[j][i]:
                    raise NotCommutative(f"b{i}*b{j} != b{j}*b{i}", (i, j))
        for i in range(n):
            e = self.basis_vector(i)
            if self.mul(self.unit, e) != e:
                raise BadUnit(f"unit does not fix b{i}", (i,))
        for i in range(n):
            for j in range(i, n):
                bij = t[i][j]
                for k in range(n):
                    left = self.mul(bij, self.basis_vector(k))
                    right = self.mul(self.basis_vector(i), t[j][k])
                    if left != right:
                        raise NotAssociative(f"(b{i}*b{j})*b{k} != b{i}*(b{j}*b{k})", (i, j, k))

    # wrappers -----------------------------------------------------------------
    def element(self, coords) -> "AlgElement":
        """Wrap coordinates; ints are read as integers of the field except over
        GF(p^f), f > 1, where they are raw digit encodings."""
        F = self.field
        out = []
        for c in coords:
            if isinstance(c, FieldScalar):
                c = c.value
            elif isinstance(c, int) and (self._prime or not F.is_finite):
                c = F.from_int(c)
            out.append(c)
        if len(out) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates")
        return AlgElement(self, tuple(out))

    def one(self) -> "AlgElement":
        return AlgElement(self, self.unit)

    def zero(self) -> "AlgElement":
        return AlgElement(self, self.zero_vector())

    def gen(self, i: int) -> "AlgElement":
        return AlgElement(self, self.basis_vector(i))

    def basis(self) -> list["AlgElement"]:
        return [self.gen(i) for i in range(self.dim)]

    def format(self, v) -> str:
        F = self.field
        terms = []
        for c, name in zip(v, self.names):
            if c == F.zero:
                continue
            cs = F.format(c)
            if name == "1":
                terms.append(cs)
            elif c == F.one:
                terms.append(name)
            else:
                terms.append(f"({cs})*{name}" if "+" in cs or "/" in cs else f"{cs}*{name}")
        return " + ".join(terms) if terms else "0"

    # whole-algebra subspaces ------------------------------------------------------
    def full(self) -> "Subalgebra":
        return Subalgebra(self, [self.basis_vector(i) for i in range(self.dim)], check=False)

    def scalars(self) -> "Subalgebra":
        """The copy ``F * 1`` of the coefficient field."""
        return Subalgebra(self, [self.unit], check=False)

    def span(self, vectors) -> "Subspace":
        return Subspace(self, vectors)

    def elements(self) -> Iterator[tuple]:
        return self.full().elements()

    # serialization -----------------------------------------------------------------
    def to_json(self) -> dict:
        F = self.field
        enc = lambda v: [F.encode(c) for c in v]  # noqa: E731
        return {
            "field": F.descriptor(),
            "dim": self.dim,
            "basis": list(self.names),
            "table": [[enc(v) for v in row] for row in self.table],
            "unit": enc(self.unit),
        }

    @classmethod
    def from_json(cls, obj: dict, check: bool = True) -> "Algebra":
        F = field_from_descriptor(obj["field"])
        dec = lambda v: tuple(F.decode(c) for c in v)  # noqa: E731
        table = [[dec(v) for v in row] for row in obj["table"]]
        if "dim" in obj and obj["dim"] != len(table):
            raise ValueError(f"dim {obj['dim']} does not match table size {len(table)}")
        unit = dec(obj["unit"]) if "unit" in obj else None
        return cls(F, table, unit, obj.get("basis"), check=check)


def algebra_make(field: Field, dim: int, table, unit=None, names=None) -> Algebra:
    if len(table) != dim:
        raise ValueError(f"table has {len(table)} rows, expected {dim}")
    return Algebra(field, table, unit, names)


# ---------------------------------------------------------------------------
# elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgElement:
    parent: Algebra
    coords: tuple

    def _other(self, other) -> tuple:
        if isinstance(other, AlgElement):
            if other.parent is not self.parent and other.parent != self.parent:
                raise ParentMismatch("elements live in different algebras")
            return other.coords
        F = self.parent.field
        if isinstance(other, FieldScalar):
            if other.field != F:
                raise FieldMismatch(f"{other.field!r} is not {F!r}")
            return self.parent.scalar(other.value)
        if isinstance(other, int):
            return self.parent.scalar(F.from_int(other))
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return AlgElement(self.parent, self.parent.add(self.coords, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return AlgElement(self.parent, self.parent.sub(self.coords, b))

    def __rsub__(self, other):
        b = self._other(other)
        return AlgElement(self.parent, self.parent.sub(b, self.coords))

    def __neg__(self):
        F = self.parent.field
        return AlgElement(self.parent, tuple(F.neg(c) for c in self.coords))

    def __mul__(self, other):
        if isinstance(other, FieldScalar):
            return AlgElement(self.parent, self.parent.scale(other.value, self.coords))
        b = self._other(other)
        return AlgElement(self.parent, self.parent.mul(self.coords, b))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return AlgElement(self.parent, self.parent.power(self.coords, e))

    def is_zero(self) -> bool:
        return linalg.is_zero(self.parent.field, self.coords)

    def __repr__(self):
        return self.parent.format(self.coords)


def mul(a: AlgElement, b: AlgElement) -> AlgElement:
    return a * b


def power(a: AlgElement, n: int) -> AlgElement:
    return a ** n


def _vec(parent: Algebra, v) -> tuple:
    if isinstance(v, AlgElement):
        if v.parent is not parent and v.parent != parent:
            raise ParentMismatch("vector from another algebra")
        return v.coords
    v = tuple(v)
    if len(v) != parent.dim:
        raise ValueError(f"expected {parent.dim} coordinates, got {len(v)}")
    return v


# ---------------------------------------------------------------------------
# subspaces, subalgebras, ideals
# ---------------------------------------------------------------------------


class Subspace:
    """A subspace of ``parent`` stored as a canonical rref basis."""

    def __init__(self, parent: Algebra, vectors=(), _rref=None):
        self.parent = parent
        if _rref is not None:
            self.rows, self.pivots = _rref
        else:
            self.rows, self.pivots = linalg.rref(parent.field, [_vec(parent, v) for v in vectors])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def field(self) -> Field:
        return self.parent.field

    def key(self) -> tuple:
        return self.rows

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.parent == other.parent and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, basis=[{', '.join(self.parent.format(r) for r in self.rows)}])"

    def _check_parent(self, other: "Subspace"):
        if other.parent is not self.parent and other.parent != self.parent:
            raise ParentMismatch("subspaces of different algebras")

    def contains(self, v) -> bool:
        return linalg.in_span(self.field, self.rows, self.pivots, _vec(self.parent, v))

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def reduce(self, v) -> tuple:
        return linalg.reduce(self.field, self.rows, self.pivots, _vec(self.parent, v))

    def coords(self, v) -> tuple:
        """Coordinates of ``v`` in this basis (``v`` must lie in the span)."""
        c = linalg.coords_in(self.field, self.rows, self.pivots, _vec(self.parent, v))
        if c is None:
            raise ValueError("vector not in subspace")
        return c

    def combine(self, coeffs) -> tuple:
        return linalg.combine(self.field, coeffs, self.rows, self.parent.dim)

    def issubset(self, other: "Subspace") -> bool:
        self._check_parent(other)
        return self.dim <= other.dim and all(other.contains(r) for r in self.rows)

    def __le__(self, other: "Subspace") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and self.issubset(other)

    def sum(self, other) -> "Subspace":
        if isinstance(other, Subspace):
            self._check_parent(other)
            other = other.rows
        return Subspace(self.parent, list(self.rows) + [_vec(self.parent, v) for v in other])

    def __add__(self, other) -> "Subspace":
        return self.sum(other)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check_parent(other)
        rr = linalg.intersection(self.field, self.rows, other.rows, self.parent.dim)
        return Subspace(self.parent, _rref=rr)

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersection(other)

    def product(self, other: "Subspace") -> "Subspace":
        """Span of pairwise products (the ideal-style product ``V * W``)."""
        mul = self.parent.mul
        return Subspace(self.parent, [mul(a, b) for a in self.rows for b in other.rows])

    def complement_in(self, W: "Subspace") -> tuple[tuple, tuple]:
        """rref basis of a complement of ``self`` inside ``W`` (needs ``self <= W``)."""
        return linalg.complement(self.field, self.rows, self.pivots, W.rows)

    def elements(self, cap: int = DEFAULT_SCAN_CAP) -> Iterator[tuple]:
        zero = Subspace(self.parent, [])
        return zero.coset_representatives(self, cap=cap)

    def coset_representatives(self, W: "Subspace", projective: bool = False,
                              cap: int = DEFAULT_SCAN_CAP) -> Iterator[tuple]:
        """One vector per coset of ``self`` in ``W``.

        With ``projective=True`` only representatives whose first nonzero
        coefficient (in the complement basis) is 1 are produced, and the zero
        coset is skipped: one representative per line of ``W / self``.
        """
        F = self.field
        if not F.is_finite:
            raise InfiniteField("coset enumeration needs a finite field")
        comp, _ = self.complement_in(W)
        d = len(comp)
        count = F.order ** d
        if count > cap:
            raise ScanCapExceeded(f"{count} cosets exceed the scan cap {cap}")
        return _combinations(F, comp, self.parent.dim, projective)

    def coset_count(self, W: "Subspace") -> int:
        return self.field.order ** (W.dim - self.dim)


def _combinations(F: Field, comp, n: int, projective: bool) -> Iterator[tuple]:
    elems = list(F.elements())
    d = len(comp)
    if not projective:
        for coeffs in itertools.product(elems, repeat=d):
            yield linalg.combine(F, coeffs, comp, n)
        return
    for lead in range(d):
        head = (F.zero,) * lead + (F.one,)
        for tail in itertools.product(elems, repeat=d - lead - 1):
            yield linalg.combine(F, head + tail, comp, n)


class Subalgebra(Subspace):
    """A subspace containing 1 and closed under multiplication."""

    def __init__(self, parent: Algebra, vectors=(), check: bool = True, _rref=None):
        super().__init__(parent, vectors, _rref=_rref)
        self._standalone = None
        if check:
            if not self.contains(parent.unit):
                raise NotASubalgebra("subspace does not contain the unit")
            mul = parent.mul
            for i, a in enumerate(self.rows):
                for b in self.rows[i:]:
                    if not self.contains(mul(a, b)):
                        raise NotASubalgebra("subspace is not closed under multiplication")

    @classmethod
    def from_subspace(cls, V: Subspace, check: bool = True) -> "Subalgebra":
        return cls(V.parent, check=check, _rref=(V.rows, V.pivots))

    def as_algebra(self) -> tuple[Algebra, "Inclusion"]:
        """This subalgebra as a standalone algebra (coordinates = pivot entries)."""
        if self._standalone is None:
            P = self.parent
            mul = P.mul
            d = self.dim
            table = [[None] * d for _ in range(d)]
            for i in range(d):
                for j in range(i, d):
                    c = self.coords(mul(self.rows[i], self.rows[j]))
                    table[i][j] = table[j][i] = c
            names = [P.format(r) for r in self.rows]
            A = Algebra(P.field, table, self.coords(P.unit), names, check=False)
            self._standalone = (A, Inclusion(A, self))
        return self._standalone


class Inclusion:
    """The embedding of ``sub.as_algebra()`` back into ``sub.parent``."""

    def __init__(self, source: Algebra, sub: Subalgebra):
        self.source = source
        self.sub = sub
        self.target = sub.parent

    def __call__(self, v) -> tuple:
        return self.sub.combine(_vec(self.source, v))

    def pullback(self, v) -> tuple:
        return self.sub.coords(v)

    def image(self, V: Subspace) -> Subspace:
        return Subspace(self.target, [self(r) for r in V.rows])

    def preimage(self, V: Subspace) -> Subspace:
        """Coordinates (in ``source``) of ``V ∩ sub``."""
        meet = self.sub.intersection(V)
        return Subspace(self.source, [self.pullback(r) for r in meet.rows])


class QuotientMap:
    """Projection ``S -> S/I`` (keeps the non-pivot coordinates after reducing
    modulo ``I``) with a linear section."""

    def __init__(self, source: Algebra, ideal_space: Subspace, target: Algebra | None = None):
        self.source = source
        self.kernel = ideal_space
        piv = set(ideal_space.pivots)
        self.free = [c for c in range(source.dim) if c not in piv]
        self.target = target

    def __call__(self, v) -> tuple:
        r = self.kernel.reduce(v)
        return tuple(r[c] for c in self.free)

    def section(self, v) -> tuple:
        out = list(self.source.zero_vector())
        for c, x in zip(self.free, _vec(self.target, v) if self.target else v):
            out[c] = x
        return tuple(out)

    def image(self, V: Subspace) -> Subspace:
        return Subspace(self.target, [self(r) for r in V.rows])

    def preimage(self, V: Subspace) -> Subspace:
        return Subspace(self.source, [self.section(r) for r in V.rows] + list(self.kernel.rows))


class Ideal:
    """A subspace of ``owner`` stable under multiplication by ``owner``."""

    def __init__(self, owner: Subalgebra, space: Subspace | Sequence, check: bool = True):
        if not isinstance(space, Subspace):
            space = Subspace(owner.parent, space)
        if space.parent is not owner.parent and space.parent != owner.parent:
            raise ParentMismatch("ideal and owner live in different algebras")
        self.owner = owner
        self.space = space
        if check:
            if not space.issubset(owner):
                raise NotAnIdeal("ideal is not contained in its owner")
            mul = owner.parent.mul
            for a in owner.rows:
                for b in space.rows:
                    if not space.contains(mul(a, b)):
                        raise NotAnIdeal("subspace is not stable under multiplication")

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def rows(self):
        return self.space.rows

    def contains(self, v) -> bool:
        return self.space.contains(v)

    def __contains__(self, v) -> bool:
        return self.space.contains(v)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.owner == other.owner and self.space == other.space

    def __hash__(self):
        return hash((self.owner.rows, self.space.rows))

    def __repr__(self):
        return f"Ideal(dim={self.dim} in owner of dim {self.owner.dim}, basis=[{', '.join(self.space.parent.format(r) for r in self.rows)}])"


def is_ideal_of(V: Subspace, T: Subspace) -> bool:
    if not V.issubset(T):
        return False
    mul = T.parent.mul
    return all(V.contains(mul(a, b)) for a in T.rows for b in V.rows)


# ---------------------------------------------------------------------------
# closure operations
# ---------------------------------------------------------------------------


def adjoin(T: Subspace, x) -> Subalgebra:
    """``T[x]`` for a subalgebra ``T``: span of ``T * x^i`` until a power falls back in."""
    P = T.parent
    x = _vec(P, x)
    V = Subspace(P, _rref=(T.rows, T.pivots))
    power = x
    mul = P.mul
    while not V.contains(power):
        V = Subspace(P, list(V.rows) + [mul(r, power) for r in T.rows])
        power = mul(power, x)
    return Subalgebra(P, check=False, _rref=(V.rows, V.pivots))


def generated_subalgebra(R: Subspace, gens: Sequence) -> Subalgebra:
    """Smallest subalgebra containing ``R``, the unit and ``gens``."""
    P = R.parent
    W = Subspace(P, list(R.rows) + [P.unit])
    if not _is_mult_closed(W):
        W = _close(W)
    T = Subalgebra(P, check=False, _rref=(W.rows, W.pivots))
    for g in gens:
        g = _vec(P, g)
        if not T.contains(g):
            T = adjoin(T, g)
    return T


def _is_mult_closed(W: Subspace) -> bool:
    mul = W.parent.mul
    return all(W.contains(mul(a, b)) for i, a in enumerate(W.rows) for b in W.rows[i:])


def _close(W: Subspace) -> Subspace:
    mul = W.parent.mul
    while True:
        new = Subspace(W.parent, list(W.rows) + [mul(a, b) for i, a in enumerate(W.rows) for b in W.rows[i:]])
        if new.dim == W.dim:
            return W
        W = new


def compositum(T1: Subalgebra, T2: Subalgebra) -> Subalgebra:
    return generated_subalgebra(T1, T2.rows)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockEmbedding:
    """Coordinates of factor ``index`` placed into the product (not unital)."""

    offset: int
    dim: int
    total: int
    zero: object

    def __call__(self, v) -> tuple:
        out = [self.zero] * self.total
        out[self.offset:self.offset + self.dim] = list(v)
        return tuple(out)


def product_algebra(factors: Sequence[Algebra]) -> tuple[Algebra, list[BlockEmbedding]]:
    if not factors:
        raise ValueError("need at least one factor")
    F = factors[0].field
    for A in factors[1:]:
        if A.field != F:
            raise FieldMismatch(f"{A.field!r} is not {F!r}")
    n = sum(A.dim for A in factors)
    zero = F.zero
    table = [[(zero,) * n for _ in range(n)] for _ in range(n)]
    unit: list = []
    names = []
    embeds = []
    off = 0
    for idx, A in enumerate(factors):
        emb = BlockEmbedding(off, A.dim, n, zero)
        embeds.append(emb)
        for i in range(A.dim):
            for j in range(A.dim):
                table[off + i][off + j] = emb(A.table[i][j])
        unit.extend(A.unit)
        suffix = f"_{idx + 1}" if len(factors) > 1 else ""
        names.extend(f"{nm}{suffix}" if nm != "1" else f"e{idx + 1}" if len(factors) > 1 else "1" for nm in A.names)
        off += A.dim
    return Algebra(F, table, unit, names, check=False), embeds


def field_algebra(F: Field) -> Algebra:
    """``F`` as a one-dimensional algebra over itself."""
    return Algebra(F, [[(F.one,)]], (F.one,), ["1"], check=False)


def split_algebra(F: Field, n: int) -> Algebra:
    """``F^n`` with componentwise product."""
    zero, one = F.zero, F.one
    table = [[tuple(one if (i == j == k) else zero for k in range(n)) for j in range(n)] for i in range(n)]
    return Algebra(F, table, (one,) * n, [f"e{i + 1}" for i in range(n)], check=False)


def truncated_poly_algebra(F: Field, m: int, nilrelations: str = "squares") -> Algebra:
    """``F[x1..xm]/(xi^2)`` (``"squares"``) or ``/(xi^2, xi*xj)`` (``"squares-and-products"``)."""
    if m < 1:
        raise ValueError("need at least one variable")
    zero, one = F.zero, F.one
    if nilrelations in ("squares", "squares-only"):
        n = 1 << m
        table = []
        for a in range(n):
            row = []
            for b in range(n):
                v = [zero] * n
                if not a & b:
                    v[a | b] = one
                row.append(tuple(v))
            table.append(row)
        names = ["1" if a == 0 else "".join(f"x{i + 1}" for i in range(m) if a >> i & 1) for a in range(n)]
    elif nilrelations == "squares-and-products":
        n = m + 1
        table = [[linalg.zero_vector(F, n) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            table[0][i] = table[i][0] = linalg.unit_vector(F, n, i)
        names = ["1"] + [f"x{i + 1}" for i in range(m)]
    else:
        raise ValueError(f"unknown nilrelations {nilrelations!r}")
    return Algebra(F, table, linalg.unit_vector(F, n, 0), names, check=False)


def _poly_coeff(base: Algebra, c) -> tuple:
    F = base.field
    if isinstance(c, AlgElement):
        return _vec(base, c)
    if isinstance(c, FieldScalar):
        return base.scalar(c.value)
    if isinstance(c, int):
        return base.scalar(F.from_int(c))
    return _vec(base, c)


def monogenic_extension(base: Algebra, coeffs: Sequence, var: str = "x", check: bool = True) -> Algebra:
    """``base[X]/(f)`` for monic ``f`` with coefficients (lowest first) in ``base``.

    Basis element ``b_i * x^j`` sits at index ``i*d + j``.
    """
    f = [_poly_coeff(base, c) for c in coeffs]
    d = len(f) - 1
    if d < 1:
        raise ValueError("polynomial must have degree at least 1")
    if f[-1] != base.unit:
        raise ValueError("polynomial must be monic")
    F = base.field
    bd = base.dim
    n = bd * d
    neg_f = [tuple(F.neg(c) for c in v) for v in f[:d]]

    def reduce_poly(poly: list) -> list:
        # poly: list of base vectors, index = power of x
        poly = list(poly)
        for k in range(len(poly) - 1, d - 1, -1):
            top = poly[k]
            if linalg.is_zero(F, top):
                continue
            for j in range(d):
                poly[k - d + j] = base.add(poly[k - d + j], base.mul(top, neg_f[j]))
            poly[k] = base.zero_vector()
        return poly[:d]

    def flatten(poly: list) -> tuple:
        out = [F.zero] * n
        for j, v in enumerate(poly):
            for i, c in enumerate(v):
                out[i * d + j] = c
        return tuple(out)

    table = [[None] * n for _ in range(n)]
    for a in range(n):
        ia, ja = divmod(a, d)
        for b in range(a, n):
            ib, jb = divmod(b, d)
            prod = [base.zero_vector() for _ in range(2 * d - 1)]
            prod[ja + jb] = base.table[ia][ib]
            table[a][b] = table[b][a] = flatten(reduce_poly(prod))
    unit = flatten([base.unit] + [base.zero_vector()] * (d - 1))
    names = []
    for i in range(bd):
        for j in range(d):
            xs = "" if j == 0 else (var if j == 1 else f"{var}^{j}")
            bn = base.names[i]
            if bn == "1":
                names.append(xs or "1")
            else:
                names.append(f"{bn}{xs}" if xs else bn)
    return Algebra(F, table, unit, names, check=check)


def base_embedding(base: Algebra, ext: Algebra, d: int):
    """Coordinates of a base element inside ``monogenic_extension(base, ...)``."""
    def embed(v):
        out = [ext.field.zero] * ext.dim
        for i, c in enumerate(_vec(base, v)):
            out[i * d] = c
        return tuple(out)
    return embed


def quotient_algebra(S: Algebra, I) -> tuple[Algebra, QuotientMap, object]:
    """``S/I`` with its projection and a section on representatives."""
    space = I.space if isinstance(I, Ideal) else I
    if isinstance(I, Ideal) and I.owner.dim != S.dim:
        raise NotAnIdeal("quotient needs an ideal of the whole algebra")
    if not is_ideal_of(space, S.full()):
        raise NotAnIdeal("subspace is not an ideal of the algebra")
    qm = QuotientMap(S, space)
    d = len(qm.free)
    if d == 0:
        raise NotAnIdeal("cannot take the quotient by the whole algebra")
    basis = [S.basis_vector(c) for c in qm.free]
    table = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            table[i][j] = table[j][i] = qm(S.mul(basis[i], basis[j]))
    names = [S.names[c] for c in qm.free]
    Q = Algebra(S.field, table, qm(S.unit), names, check=False)
    qm.target = Q
    return Q, qm, qm.section


def subalgebra(S: Algebra, vectors, check: bool = True) -> Subalgebra:
    return Subalgebra(S, vectors, check=check)


def extension_to_json(R: Subalgebra) -> dict:
    S = R.parent
    obj = S.to_json()
    obj["R_basis"] = [[S.field.encode(c) for c in row] for row in R.rows]
    return obj


def extension_from_json(obj: dict, check: bool = True) -> tuple[Subalgebra, Algebra]:
    S = Algebra.from_json(obj, check=check)
    F = S.field
    if "R_basis" in obj:
        rows = [tuple(F.decode(c) for c in row) for row in obj["R_basis"]]
        R = Subalgebra(S, rows, check=check)
    else:
        R = S.scalars()
    return R, S
