"""Exact dense linear algebra over a :class:`~ringlat.fields.Field`.

Vectors are tuples of raw field values.  Every subspace is carried in reduced
row echelon form, which is canonical: two spans are equal iff their reduced
bases are identical tuples.
"""

from __future__ import annotations

from typing import Sequence

from .fields import Field


def is_zero(F: Field, v) -> bool:
    z = F.zero
    return all(c == z for c in v)


def zero_vector(F: Field, n: int) -> tuple:
    return (F.zero,) * n


def unit_vector(F: Field, n: int, i: int) -> tuple:
    v = [F.zero] * n
    v[i] = F.one
    return tuple(v)


def rref(F: Field, rows: Sequence[Sequence]) -> tuple[tuple[tuple, ...], tuple[int, ...]]:
    """Reduced row echelon form of the span of ``rows``: ``(basis, pivots)``."""
    mat = [list(r) for r in rows if not is_zero(F, r)]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    zero, one = F.zero, F.one
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][col] != zero:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][col]
        row = tuple(mat[r]) if lead == one else F.scale(F.inv(lead), mat[r])
        mat[r] = row
        for i in range(len(mat)):
            if i != r:
                c = mat[i][col]
                if c != zero:
                    mat[i] = F.axpy(mat[i], F.neg(c), row)
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(mat[i]) for i in range(r)), tuple(pivots)


def reduce(F: Field, basis: Sequence[tuple], pivots: Sequence[int], v) -> tuple:
    """Residue of ``v`` after clearing the pivot columns of an rref basis."""
    zero = F.zero
    v = tuple(v)
    for row, col in zip(basis, pivots):
        c = v[col]
        if c != zero:
            v = F.axpy(v, F.neg(c), row)
    return v


def in_span(F: Field, basis, pivots, v) -> bool:
    return is_zero(F, reduce(F, basis, pivots, v))


def coords_in(F: Field, basis, pivots, v):
    """Coefficients of ``v`` in an rref basis, or ``None`` if outside the span."""
    if not in_span(F, basis, pivots, v):
        return None
    return tuple(v[c] for c in pivots)


def combine(F: Field, coeffs, vectors, n: int) -> tuple:
    out = zero_vector(F, n)
    zero = F.zero
    for c, v in zip(coeffs, vectors):
        if c != zero:
            out = F.axpy(out, c, v)
    return out


def nullspace(F: Field, equations: Sequence[Sequence], n: int) -> list[tuple]:
    """Basis of ``{x in F^n : e . x = 0 for every equation row e}``."""
    basis, pivots = rref(F, equations)
    pivset = set(pivots)
    out = []
    for free in range(n):
        if free in pivset:
            continue
        x = [F.zero] * n
        x[free] = F.one
        for row, col in zip(basis, pivots):
            x[col] = F.neg(row[free])
        out.append(tuple(x))
    return out


def solve(F: Field, columns: Sequence[tuple], target: tuple):
    """Find ``c`` with ``sum(c_j * columns[j]) == target`` or return ``None``."""
    m = len(columns)
    if m == 0:
        return () if is_zero(F, target) else None
    n = len(target)
    # augmented rows: one equation per coordinate
    rows = [tuple(columns[j][i] for j in range(m)) + (target[i],) for i in range(n)]
    basis, pivots = rref(F, rows)
    if pivots and pivots[-1] == m:
        return None
    x = [F.zero] * m
    for row, col in zip(basis, pivots):
        x[col] = row[m]
    return tuple(x)


def intersection(F: Field, U: Sequence[tuple], V: Sequence[tuple], n: int) -> tuple[tuple, tuple]:
    """rref of span(U) ∩ span(V) via the Zassenhaus block reduction."""
    if not U or not V:
        return (), ()
    z = zero_vector(F, n)
    rows = [tuple(u) + tuple(u) for u in U] + [tuple(v) + z for v in V]
    basis, pivots = rref(F, rows)
    out = [row[n:] for row, col in zip(basis, pivots) if col >= n]
    return rref(F, out)


def complement(F: Field, sub_basis, sub_pivots, rows) -> tuple[tuple, tuple]:
    """rref basis of the residues of ``rows`` modulo an rref subspace; its span
    is a complement of the subspace inside ``span(sub) + span(rows)``."""
    return rref(F, [reduce(F, sub_basis, sub_pivots, r) for r in rows])


def rank(F: Field, rows) -> int:
    return len(rref(F, rows)[0])
