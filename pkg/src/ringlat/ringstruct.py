"""Ring structure of finite-dimensional algebras: nilradical, idempotents and
local factors, maximal ideals, residue fields, conductor, radicals and the
crucial ideal of an extension."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field as dc_field

from . import linalg
from .algebra import (
    Algebra,
    Ideal,
    Subalgebra,
    Subspace,
    _vec,
    quotient_algebra,
)
from .errors import UnsupportedDecomposition
from .fields import (
    Field,
    RationalFunctionField,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_trim,
)

# Root search over F_p(t) enumerates divisors; refuse beyond this many candidates.
ROOT_SEARCH_CAP = 1 << 14


def _as_sub(T) -> Subalgebra:
    return T.full() if isinstance(T, Algebra) else T


# ---------------------------------------------------------------------------
# nilradical
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=4096)
def _nilradical_space(S: Algebra) -> Subspace:
    F, n = S.field, S.dim
    monos = F.p_monomials()
    fb = [S.frob(S.basis_vector(i)) for i in range(n)]
    N = Subspace(S, [])
    while True:
        piv = set(N.pivots)
        free = [c for c in range(n) if c not in piv]
        red = [N.reduce(v) for v in fb]
        equations = []
        for col in free:
            exps = [F.p_basis_expand(red[i][col]) for i in range(n)]
            for m in monos:
                row = tuple(e.get(m, F.zero) for e in exps)
                if not linalg.is_zero(F, row):
                    equations.append(row)
        new = Subspace(S, linalg.nullspace(F, equations, n))
        if new == N:
            break
        N = new
    _verify_nil(S, N)
    return N


def _verify_nil(S: Algebra, N: Subspace) -> None:
    e = 1
    while e < S.dim:
        e *= S.field.p
    for b in N.rows:
        if not linalg.is_zero(S.field, S.power(b, e)):
            raise AssertionError("nilradical basis element is not nilpotent")
        for c in N.rows:
            if not N.contains(S.mul(b, c)):
                raise AssertionError("nilradical is not multiplicatively closed")


def nilradical(S) -> Ideal:
    """The ideal of nilpotent elements of an algebra or subalgebra."""
    T = _as_sub(S)
    if T.dim == T.parent.dim:
        return Ideal(T, _nilradical_space(T.parent), check=False)
    A, inc = T.as_algebra()
    return Ideal(T, inc.image(_nilradical_space(A)), check=False)


def is_nilpotent(S: Algebra, v) -> bool:
    e = 1
    while e < S.dim:
        e *= S.field.p
    return linalg.is_zero(S.field, S.power(_vec(S, v), e))


def is_unit(a, S: Algebra | None = None) -> bool:
    """``a`` is invertible iff multiplication by ``a`` has full rank."""
    if S is None:
        S, a = a.parent, a.coords
    return linalg.rank(S.field, S.mult_matrix_rows(_vec(S, a))) == S.dim


def is_reduced(S: Algebra) -> bool:
    return _nilradical_space(S).dim == 0


# ---------------------------------------------------------------------------
# minimal polynomials and roots
# ---------------------------------------------------------------------------


def min_poly(S: Algebra, x, unit=None) -> tuple:
    """Monic minimal polynomial of ``x`` over the field, inside the (possibly
    non-unital) algebra ``unit * S`` when ``unit`` is an idempotent."""
    F = S.field
    unit = S.unit if unit is None else unit
    powers = [unit]
    cur = _vec(S, x)
    while True:
        basis, piv = linalg.rref(F, powers)
        if linalg.in_span(F, basis, piv, cur):
            c = linalg.solve(F, powers, cur)
            return tuple(F.neg(ci) for ci in c) + (F.one,)
        powers.append(cur)
        cur = S.mul(cur, x)


def _rf_poly_coeffs(K: RationalFunctionField, poly: tuple) -> list[tuple]:
    """Clear denominators: integral coefficient polynomials over the base."""
    B = K.base
    lcm = (B.one,)
    for c in poly:
        den = c[1]
        g = poly_gcd(B, lcm, den)
        lcm = poly_divmod(B, poly_mul(B, lcm, den), g)[0]
    out = []
    for c in poly:
        num, den = c
        out.append(poly_mul(B, num, poly_divmod(B, lcm, den)[0]))
    return out


def _base_polys(B: Field, max_deg: int):
    elems = list(B.elements())
    for d in range(max_deg + 1):
        for coeffs in itertools.product(elems, repeat=d):
            for lead in elems[1:]:
                yield tuple(coeffs) + (lead,)


def roots(F: Field, poly: tuple) -> list:
    """All roots in ``F`` of a nonzero polynomial.

    Exhaustive over finite fields; over F_q(t) by the rational root test on
    divisor candidates; deeper towers are not supported."""
    poly = poly_trim(F, poly)
    if len(poly) <= 1:
        return []
    if F.is_finite:
        return [a for a in F.elements() if poly_eval(F, poly, a) == F.zero]
    if not isinstance(F, RationalFunctionField) or not F.base.is_finite:
        raise UnsupportedDecomposition("root finding over this tower is not supported")
    B = F.base
    coeffs = _rf_poly_coeffs(F, poly)
    found = []
    if not coeffs[0]:
        found.append(F.zero)
        while coeffs and not coeffs[0]:
            coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return found
    a0, ad = coeffs[0], coeffs[-1]
    count = (B.order ** (len(a0))) * (B.order ** (len(ad)))
    if count > ROOT_SEARCH_CAP:
        raise UnsupportedDecomposition("rational root search exceeds its cap")
    num_cands = [n for n in _base_polys(B, len(a0) - 1) if not poly_divmod(B, a0, n)[1]]
    den_cands = [d for d in _base_polys(B, len(ad) - 1) if d[-1] == B.one and not poly_divmod(B, ad, d)[1]]
    seen = set(found)
    for n in num_cands:
        for d in den_cands:
            r = F.fraction(n, d)
            if r not in seen and poly_eval(F, poly, r) == F.zero:
                seen.add(r)
                found.append(r)
    return found


def is_irreducible_small(F: Field, poly: tuple) -> bool | None:
    """Irreducibility for degree ≤ 3 via absence of roots; ``None`` if undecided."""
    d = len(poly_trim(F, poly)) - 1
    if d == 1:
        return True
    if d > 3:
        return None
    try:
        return not roots(F, poly)
    except UnsupportedDecomposition:
        return None


# ---------------------------------------------------------------------------
# local decomposition
# ---------------------------------------------------------------------------


@dataclass
class LocalDecomposition:
    algebra: Algebra
    idempotents: list[tuple]
    factors: list[tuple[Algebra, object]]
    max_ideals: list[Ideal]
    residue_dims: list[int] = dc_field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.idempotents)


class FactorProjection:
    """``v -> e*v`` expressed in the basis of the factor ``eS``."""

    def __init__(self, S: Algebra, e: tuple, space: Subspace):
        self.S, self.e, self.space = S, e, space

    def __call__(self, v) -> tuple:
        return self.space.coords(self.S.mul(self.e, _vec(self.S, v)))


def _idempotent_split(A: Algebra, e: tuple, x: tuple) -> list[tuple] | None:
    """Split idempotent ``e`` of a reduced algebra along the roots of the
    minimal polynomial of ``e*x`` in ``eA``; ``None`` if no split is found."""
    F = A.field
    ex = A.mul(e, x)
    f = min_poly(A, ex, e)
    if len(f) <= 2:
        return None
    rs = roots(F, f)
    if not rs:
        return None
    pieces = []
    rest = e
    for lam in rs:
        h = poly_divmod(F, f, (F.neg(lam), F.one))[0]
        hl = poly_eval(F, h, lam)
        # h(ex) evaluated inside eA
        acc = A.zero_vector()
        for c in reversed(h):
            acc = A.add(A.mul(acc, ex), F.scale(c, e))
        piece = F.scale(F.inv(hl), acc)
        pieces.append(piece)
        rest = A.sub(rest, piece)
    if not linalg.is_zero(F, rest):
        pieces.append(rest)
    return pieces if len(pieces) > 1 else None


def _frobenius_fixed(A: Algebra) -> list[tuple]:
    """Basis of ``{x : x^q = x}`` for a reduced algebra over GF(q)."""
    F = A.field
    q = F.order
    n = A.dim
    imgs = [A.sub(A.power(A.basis_vector(i), q), A.basis_vector(i)) for i in range(n)]
    eqs = [tuple(imgs[i][k] for i in range(n)) for k in range(n)]
    return linalg.nullspace(F, eqs, n)


def _factor_space(A: Algebra, e: tuple) -> Subspace:
    return Subspace(A, A.mult_matrix_rows(e))


def _purely_inseparable(A: Algebra, e: tuple, space: Subspace) -> bool:
    """Every element of ``eA`` has a p-power in ``F*e`` (checked on a basis)."""
    F = A.field
    line = Subspace(A, [e])
    bound = 1
    while bound < max(space.dim, 2):
        bound *= F.p
    for b in space.rows:
        x = b
        k = 1
        while not line.contains(x):
            if k > bound:
                return False
            x = A.frob(x)
            k *= F.p
    return True


def _certify_local_field(A: Algebra, e: tuple, space: Subspace) -> bool:
    """A reduced ``eA`` over an infinite field is a field if it is purely
    inseparable, or generated by one element of degree ≤ 3 with no roots."""
    if space.dim == 1 or _purely_inseparable(A, e, space):
        return True
    for b in space.rows:
        f = min_poly(A, b, e)
        if len(f) - 1 == space.dim and is_irreducible_small(A.field, f):
            return True
    return False


@functools.lru_cache(maxsize=4096)
def local_decomposition(S: Algebra) -> LocalDecomposition:
    """Primitive idempotents, local factors and maximal ideals of ``S``."""
    F = S.field
    N = _nilradical_space(S)
    if N.dim:
        A, qm, sec = quotient_algebra(S, N)
    else:
        A, qm, sec = S, None, None
    if F.is_finite:
        fixed = _frobenius_fixed(A)
        idems = [A.unit]
        for b in fixed:
            new = []
            for e in idems:
                split = _idempotent_split(A, e, b)
                new.extend(split if split else [e])
            idems = new
        if len(idems) != len(fixed):
            raise AssertionError("idempotent refinement did not reach the fixed algebra dimension")
    else:
        idems = [A.unit]
        changed = True
        while changed:
            changed = False
            for idx, e in enumerate(idems):
                space = _factor_space(A, e)
                if _certify_local_field(A, e, space):
                    continue
                split = None
                for b in space.rows:
                    split = _idempotent_split(A, e, b)
                    if split:
                        break
                if split is None:
                    raise UnsupportedDecomposition(
                        "could not split the reduced algebra nor certify a factor as a field"
                    )
                idems = idems[:idx] + split + idems[idx + 1:]
                changed = True
                break
    # lift idempotents through the nilradical by Frobenius powering
    lifted = []
    for e in idems:
        v = sec(e) if sec else e
        while S.mul(v, v) != v:
            v = S.frob(v)
        lifted.append(v)
    lifted.sort()
    factors = []
    max_ideals = []
    residue_dims = []
    full = S.full()
    for e in lifted:
        space = _factor_space(S, e)
        d = space.dim
        table = [[None] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                table[i][j] = table[j][i] = space.coords(S.mul(space.rows[i], space.rows[j]))
        fac = Algebra(F, table, space.coords(e), [S.format(r) for r in space.rows], check=False)
        factors.append((fac, FactorProjection(S, e, space)))
        comp = S.sub(S.unit, e)
        M = Subspace(S, list(N.rows) + S.mult_matrix_rows(comp))
        max_ideals.append(Ideal(full, M, check=False))
        residue_dims.append(S.dim - M.dim)
    return LocalDecomposition(S, lifted, factors, max_ideals, residue_dims)


# ---------------------------------------------------------------------------
# maximal ideals, residue fields
# ---------------------------------------------------------------------------


def maximal_ideals(T) -> list[Ideal]:
    """Maximal ideals of an algebra or subalgebra (owner ``T``)."""
    T = _as_sub(T)
    S = T.parent
    if T.dim == S.dim:
        return local_decomposition(S).max_ideals
    A, inc = T.as_algebra()
    dec = local_decomposition(A)
    return [Ideal(T, inc.image(M.space), check=False) for M in dec.max_ideals]


def is_local(T) -> bool:
    return len(maximal_ideals(T)) == 1


def is_maximal_ideal(T, I) -> bool:
    space = I.space if isinstance(I, Ideal) else I
    return any(M.space == space for M in maximal_ideals(T))


def residue_field(T, M) -> tuple[Algebra, object]:
    """``T/M`` as an algebra with a projection from coordinates of ``T.parent``.

    Raises ``ValueError`` when the quotient is not a field."""
    T = _as_sub(T)
    space = M.space if isinstance(M, Ideal) else M
    A, inc = T.as_algebra()
    Mi = inc.preimage(space)
    Q, qm, _ = quotient_algebra(A, Mi)
    if not _is_field(Q):
        raise ValueError("quotient is not a field: ideal is not maximal")
    return Q, lambda v: qm(inc.pullback(v))


def _is_field(Q: Algebra) -> bool:
    F = Q.field
    if F.is_finite and F.order ** Q.dim <= 1 << 16:
        return all(is_unit(v, Q) for v in Q.full().elements() if not linalg.is_zero(F, v))
    if not is_reduced(Q):
        return False
    try:
        return local_decomposition(Q).count == 1
    except UnsupportedDecomposition:
        return all(is_unit(Q.basis_vector(i), Q) for i in range(Q.dim)) and _certify_local_field(
            Q, Q.unit, Q.full()
        )


def is_field_algebra(Q: Algebra) -> bool:
    return _is_field(Q)


# ---------------------------------------------------------------------------
# conductor, radicals, support
# ---------------------------------------------------------------------------


def conductor(R: Subalgebra, S) -> Ideal:
    """``(R:S) = {x in S : x*S ⊆ R}`` as an ideal of ``R`` (and of ``S``)."""
    T = _as_sub(S)
    P = T.parent
    F = P.field
    n = T.dim
    prods = [[R.reduce(P.mul(a, b)) for b in T.rows] for a in T.rows]
    free = [c for c in range(P.dim) if c not in set(R.pivots)]
    equations = []
    for j in range(n):
        for col in free:
            row = tuple(prods[i][j][col] for i in range(n))
            if not linalg.is_zero(F, row):
                equations.append(row)
    sol = linalg.nullspace(F, equations, n)
    C = Subspace(P, [T.combine(c) for c in sol])
    ideal = Ideal(R, C, check=True)
    Ideal(T, C, check=True)
    return ideal


def radical_in(T, I) -> Ideal:
    """``√I`` inside ``T``: the preimage of the nilradical of ``T/I``."""
    T = _as_sub(T)
    space = I.space if isinstance(I, Ideal) else I
    if space.dim == T.dim:
        return Ideal(T, space, check=False)
    A, inc = T.as_algebra()
    Ia = inc.preimage(space)
    if Ia.dim == 0:
        return Ideal(T, inc.image(_nilradical_space(A)), check=False)
    Q, qm, _ = quotient_algebra(A, Ia)
    rad = qm.preimage(_nilradical_space(Q))
    return Ideal(T, inc.image(rad), check=False)


def ideal_generated(T, vectors) -> Ideal:
    """Smallest ideal of ``T`` containing ``vectors``."""
    T = _as_sub(T)
    P = T.parent
    V = Subspace(P, [P.mul(t, _vec(P, v)) for t in T.rows for v in vectors])
    return Ideal(T, V, check=False)


@dataclass
class CrucialReport:
    conductor: Ideal
    msupp: list[Ideal]
    crucial: Ideal | None


def crucial_report(R: Subalgebra, S) -> CrucialReport:
    C = conductor(R, S)
    msupp = [M for M in maximal_ideals(R) if C.space.issubset(M.space)]
    crucial = None
    if len(msupp) == 1:
        crucial = radical_in(R, C)
        if crucial.space != msupp[0].space:
            raise AssertionError("radical of the conductor differs from the unique supporting maximal ideal")
    return CrucialReport(C, msupp, crucial)


# ---------------------------------------------------------------------------
# spectral data
# ---------------------------------------------------------------------------


@dataclass
class SpectralData:
    """For each maximal ideal Q of S: its contraction to R and residue dims."""

    max_S: list[Ideal]
    contractions: list[Subspace]
    residue_dims_S: list[int]
    residue_dims_R: list[int]

    @property
    def residues_isomorphic(self) -> bool:
        return self.residue_dims_S == self.residue_dims_R

    @property
    def injective(self) -> bool:
        keys = [c.key() for c in self.contractions]
        return len(set(keys)) == len(keys)


def spectral_data(R: Subalgebra, S) -> SpectralData:
    T = _as_sub(S)
    maxs = maximal_ideals(T)
    contr = [R.intersection(Q.space) for Q in maxs]
    return SpectralData(
        maxs,
        contr,
        [T.dim - Q.dim for Q in maxs],
        [R.dim - c.dim for c in contr],
    )
