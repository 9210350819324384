"""Named example extensions with their expected verdicts.

Each builder returns a :class:`CatalogEntry` holding ``R ⊆ S`` and an
``expected`` dict whose keys mirror the analysis report: ``minimal``,
``minimal_type``, ``pw``, ``pair``, ``co_pw``, ``case``, ``nodes``, ``atoms``,
``length``, ``geometric`` and ``step_types``.  Only keys that are known for
the given parameters are present.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .algebra import (
    Algebra,
    Subalgebra,
    Subspace,
    extension_to_json,
    field_algebra,
    monogenic_extension,
    split_algebra,
    truncated_poly_algebra,
)
from .errors import UnknownExample
from .fields import GF, RF, Field, FieldScalar, find_irreducible, _is_prime
from .ringstruct import ideal_generated


@dataclass
class CatalogEntry:
    name: str
    R: Subalgebra
    S: Algebra
    expected: dict
    description: str
    tower: list[Subalgebra] = dc_field(default_factory=list)
    elements: dict = dc_field(default_factory=dict)

    @property
    def top(self) -> Subalgebra:
        return self.S.full()

    def to_json(self) -> dict:
        F = self.S.field
        obj = {"id": self.name, "description": self.description}
        obj.update(extension_to_json(self.R))
        obj["expected"] = self.expected
        if self.tower:
            obj["tower"] = [[[F.encode(c) for c in r] for r in T.rows] for T in self.tower]
        if self.elements:
            obj["elements"] = {k: [F.encode(c) for c in v] for k, v in self.elements.items()}
        return obj


def _gf_from_order(q: int) -> Field:
    for p in range(2, q + 1):
        if q % p == 0 and _is_prime(p):
            f, n = 0, q
            while n % p == 0:
                n //= p
                f += 1
            if n != 1:
                break
            return GF(p, f)
    raise ValueError(f"{q} is not a prime power")


def _scalars_entry(name, S, expected, description, **kw) -> CatalogEntry:
    return CatalogEntry(name, S.scalars(), S, expected, description, **kw)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------


def ex1(m: int = 2, p: int = 2) -> CatalogEntry:
    """``k ⊆ k[x1..xm]/(xi²)``: subintegral, pointwise minimal, not a pair for m ≥ 2."""
    S = truncated_poly_algebra(GF(p), m, "squares")
    if m == 1:
        exp = {"minimal": True, "minimal_type": "Ramified", "pw": True, "pair": True, "co_pw": False}
    elif p == 2:
        exp = {"minimal": False, "pw": True, "pair": False, "co_pw": False, "case": "(a)"}
    else:
        # (x1 + x2)^2 = 2 x1 x2 is nonzero in odd characteristic
        exp = {"minimal": False, "pw": False, "pair": False, "co_pw": False}
    return _scalars_entry(f"ex1(m={m})" if p == 2 else f"ex1(m={m},p={p})", S, exp,
                          "squares of the generators vanish, products do not")


def ex2(m: int = 3, p: int = 2) -> CatalogEntry:
    """``k ⊆ k[x1..xm]/(xi xj)``: pointwise minimal pair; co-pointwise iff m = 2."""
    S = truncated_poly_algebra(GF(p), m, "squares-and-products")
    if m == 1:
        exp = {"minimal": True, "minimal_type": "Ramified", "pw": True, "pair": True, "co_pw": False}
    else:
        exp = {"minimal": False, "pw": True, "pair": True, "co_pw": m == 2, "case": "(a)", "length": m}
        if m == 2 and p == 2:
            exp.update({"nodes": 5, "atoms": 3, "geometric": True})
    return _scalars_entry(f"ex2(m={m})" if p == 2 else f"ex2(m={m},p={p})", S, exp,
                          "all products of the generators vanish")


def split(n: int = 3, q: int = 2) -> CatalogEntry:
    """Diagonal ``k ⊆ k^n``: seminormal and infra-integral."""
    F = _gf_from_order(q)
    S = split_algebra(F, n)
    if n == 2:
        exp = {"minimal": True, "minimal_type": "Decomposed", "pw": True, "pair": True, "co_pw": False,
               "nodes": 2, "length": 1}
    elif q == 2:
        exp = {"minimal": False, "pw": True, "pair": n <= 3, "co_pw": n == 3, "case": "(b)", "length": n - 1}
        if n == 3:
            exp.update({"nodes": 5, "atoms": 3, "geometric": True})
        if n == 4:
            exp.update({"nodes": 15, "atoms": 7, "geometric": False})
    else:
        exp = {"minimal": False, "pw": False, "pair": False, "co_pw": False, "length": n - 1}
    return _scalars_entry(f"split(n={n},q={q})", S, exp, "diagonal embedding into a product of copies")


def ff(q: int = 2, e: int = 2) -> CatalogEntry:
    """Finite field extension ``GF(q) ⊂ GF(q^e)``."""
    F = _gf_from_order(q)
    coeffs = [FieldScalar(F, c) for c in find_irreducible(F, e)]
    S = monogenic_extension(field_algebra(F), coeffs, var="g")
    if _is_prime(e):
        exp = {"minimal": True, "minimal_type": "Inert", "pw": True, "pair": True, "co_pw": False, "length": 1}
    else:
        exp = {"minimal": False, "pw": False, "pair": False, "co_pw": False}
    return _scalars_entry(f"ff(q={q},e={e})", S, exp, "finite field extension of the given degree")


def ex5() -> CatalogEntry:
    """``k ⊂ K[x]/(x²)`` with ``K = k[y]``, ``y² = t`` over ``k = F_2(t)``.

    ``k ⊂ k[x]`` is ramified, ``k ⊂ k[y]`` is inert and the t-closure
    ``k + kx + kxy`` lies strictly between ``k`` and ``S``."""
    k = RF(GF(2), "t")
    t = k.gen()
    K = monogenic_extension(field_algebra(k), [-t, 0, 1], var="y")
    S = monogenic_extension(K, [0, 0, 1], var="x")
    one, zero = k.one, k.zero
    x = (zero, one, zero, zero)
    y = (zero, zero, one, zero)
    exp = {"minimal": False, "pw": True, "pair": False, "co_pw": False, "case": "(d)",
           "step_types": {"x": "Ramified", "y": "Inert"}, "length": 3}
    return _scalars_entry("ex5", S, exp, "purely inseparable quadratic field with a square-zero element adjoined",
                          elements={"x": x, "y": y})


def remark7151() -> CatalogEntry:
    """``k ⊂ R[x]`` with ``R = k[t]/(t²)``, ``x² = u + t`` over ``k = F_2(u)``.

    The t-closure is ``k + kt + ktx`` and the residue extension is radicial,
    yet ``k[x]`` is all of ``S`` and ``k ⊂ k[x]`` is not minimal."""
    k = RF(GF(2), "u")
    u = k.gen().value
    A = monogenic_extension(field_algebra(k), [0, 0, 1], var="t")
    S = monogenic_extension(A, [(k.neg(u), k.neg(k.one)), 0, 1], var="x")
    one, zero = k.one, k.zero
    exp = {"minimal": False, "pw": False, "pair": False, "co_pw": False}
    return _scalars_entry("remark7151", S, exp, "radicial residue extension over a square-zero base, not pointwise minimal",
                          elements={"x": (zero, one, zero, zero)})


def ex3_two_var() -> CatalogEntry:
    """``k(t1, t2) ⊂ k(t1, t2)[y1, y2]`` with ``yi² = ti`` over ``k = F_2``:
    a height-one radicial field extension of degree 4."""
    F = RF(RF(GF(2), "t1"), "t2")
    t2 = F.gen()
    t1 = FieldScalar(F, F.embed(F.base.gen().value))
    K = monogenic_extension(field_algebra(F), [-t1, 0, 1], var="y1")
    S = monogenic_extension(K, [-t2, 0, 1], var="y2")
    exp = {"minimal": False, "pw": True, "pair": True, "co_pw": True, "case": "(c)", "length": 2}
    return _scalars_entry("ex3-two-var", S, exp, "degree-4 purely inseparable extension of a two-variable function field")


def prop7170(m: int = 2, gens: tuple[str, ...] = ("x1",)) -> CatalogEntry:
    """``k ⊂ k + J`` for ``J`` the ideal of ``k[x1..xm]/(xi²)`` generated by
    the named basis elements; realized as a standalone algebra."""
    from .pointwise import jacobson_builder

    S = truncated_poly_algebra(GF(2), m, "squares")
    vecs = [S.basis_vector(S.names.index(g)) for g in gens]
    J = ideal_generated(S.full(), vecs).space
    built = jacobson_builder(S.scalars(), S, J)
    A, _ = built.T.as_algebra()
    exp = {"pw": True, "minimal": A.dim == 2}
    if A.dim == 2:
        exp["minimal_type"] = "Ramified"
    else:
        exp["case"] = "(a)"
    return _scalars_entry(f"prop7170(m={m},gens={'+'.join(gens)})", A, exp,
                          "base ring plus an ideal whose elements square to zero")


def tower_partition(n: int = 3) -> CatalogEntry:
    """``F_2 ⊂ ... ⊂ F_2^n`` by splitting off one block at a time."""
    F = GF(2)
    S = split_algebra(F, n)
    one, zero = F.one, F.zero
    tower = []
    for j in range(n):
        blocks = [[i] for i in range(j)] + [list(range(j, n))]
        rows = [tuple(one if i in b else zero for i in range(n)) for b in blocks]
        tower.append(Subalgebra(S, rows))
    exp = {"minimal": n == 2, "pw": True, "pair": n <= 3, "co_pw": n == 3, "length": n - 1,
           "step_types": ["Decomposed"] * (n - 1)}
    if n == 3:
        exp.update({"nodes": 5, "residue_condition": True})
    return CatalogEntry(f"tower-partition(n={n})", S.scalars(), S, exp,
                        "chain of diagonal refinements", tower=tower)


CATALOG: dict[str, Callable[..., CatalogEntry]] = {
    "ex1": ex1,
    "ex2": ex2,
    "split": split,
    "ff": ff,
    "ex5": ex5,
    "remark7151": remark7151,
    "ex3-two-var": ex3_two_var,
    "prop7170": prop7170,
    "tower-partition": tower_partition,
}

_PARAM_ORDER = {
    "ex1": ["m", "p"],
    "ex2": ["m", "p"],
    "split": ["n", "q"],
    "ff": ["q", "e"],
    "prop7170": ["m", "gens"],
    "tower-partition": ["n"],
}


def _parse_value(key: str, raw: str):
    if key == "gens":
        return tuple(g for g in raw.split("+") if g)
    return int(raw)


def parse_name(text: str) -> tuple[str, dict]:
    """``"split(3,2)"``, ``"split(n=3,q=2)"`` or ``"split"`` -> (name, kwargs)."""
    m = re.fullmatch(r"\s*([\w-]+)\s*(?:\((.*)\))?\s*", text)
    if not m:
        raise UnknownExample(f"cannot parse example name {text!r}")
    name, args = m.group(1), m.group(2)
    if name not in CATALOG:
        raise UnknownExample(f"unknown example {name!r}; known: {', '.join(CATALOG)}")
    kwargs: dict = {}
    if args and args.strip():
        order = _PARAM_ORDER.get(name, [])
        for pos, part in enumerate(a.strip() for a in args.split(",")):
            if "=" in part:
                key, raw = (s.strip() for s in part.split("=", 1))
            else:
                if pos >= len(order):
                    raise UnknownExample(f"too many parameters for {name}")
                key, raw = order[pos], part
            if key not in order:
                raise UnknownExample(f"{name} has no parameter {key!r}")
            try:
                kwargs[key] = _parse_value(key, raw)
            except ValueError as exc:
                raise UnknownExample(f"bad value for {key}: {raw!r}") from exc
    return name, kwargs


def get(text: str, **overrides) -> CatalogEntry:
    name, kwargs = parse_name(text)
    kwargs.update(overrides)
    return CATALOG[name](**kwargs)


ACCEPTANCE_ENTRIES = [
    "ex1(m=2)",
    "ex2(m=3)",
    "ex2(m=2)",
    "split(n=3,q=2)",
    "split(n=4,q=2)",
    "split(n=3,q=3)",
    "ff(q=2,e=2)",
    "ex5",
    "remark7151",
    "ex3-two-var",
]


def all_entries() -> list[CatalogEntry]:
    """Default instance of every builder plus the acceptance parameterizations."""
    names = list(dict.fromkeys(ACCEPTANCE_ENTRIES + ["ex1(m=1)", "ex2(m=1)", "split(n=2,q=2)", "ff(q=2,e=4)",
                                                      "ff(q=4,e=2)", "prop7170", "prop7170(m=2,gens=x1+x2)",
                                                      "tower-partition(n=3)"]))
    return [get(n) for n in names]
