"""Exact coefficient fields: GF(p^f) and rational-function towers over them.

Every field object works on *raw* values (ints for finite fields, canonical
``(num, den)`` tuples for rational functions) so that the linear algebra and
the structure-constant code can stay allocation-light.  :class:`FieldScalar`
wraps a raw value together with its field for user-facing arithmetic.

Polynomials over a field are tuples of raw coefficients, lowest degree
first, with no trailing zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

import itertools
import random as _random
from dataclasses import dataclass
from typing import Any, Iterator

from .errors import (
    DescriptorMismatch,
    DivisionByZero,
    InfiniteField,
    NotIrreducible,
    UnsupportedTower,
)

# Conway polynomials, coefficients lowest degree first.
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}

MAX_TOWER_DEPTH = 2


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# polynomials over an arbitrary field (raw coefficients)
# ---------------------------------------------------------------------------


def poly_trim(F: "Field", a) -> tuple:
    a = list(a)
    zero = F.zero
    while a and a[-1] == zero:
        a.pop()
    return tuple(a)


def poly_add(F: "Field", a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = F.add(out[i], c)
    return poly_trim(F, out)


def poly_neg(F: "Field", a: tuple) -> tuple:
    return tuple(F.neg(c) for c in a)


def poly_sub(F: "Field", a: tuple, b: tuple) -> tuple:
    return poly_add(F, a, poly_neg(F, b))


def poly_scale(F: "Field", c, a: tuple) -> tuple:
    if c == F.zero:
        return ()
    return tuple(F.mul(c, x) for x in a)


def poly_mul(F: "Field", a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    zero = F.zero
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == zero:
            continue
        for j, y in enumerate(b):
            if y != zero:
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(F, out)


def poly_divmod(F: "Field", a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if b and b[-1] == F.zero:
        b = poly_trim(F, b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    if len(rem) - 1 < db:
        return (), poly_trim(F, rem)
    quot = [F.zero] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c == F.zero:
            continue
        c = F.mul(c, inv_lead)
        quot[k - db] = c
        for j, y in enumerate(b):
            rem[k - db + j] = F.sub(rem[k - db + j], F.mul(c, y))
    return poly_trim(F, quot), poly_trim(F, rem[:db])


def poly_monic(F: "Field", a: tuple) -> tuple:
    if not a:
        return a
    inv = F.inv(a[-1])
    return tuple(F.mul(inv, c) for c in a)


def poly_gcd(F: "Field", a: tuple, b: tuple) -> tuple:
    zero = F.zero
    if a and a[-1] == zero:
        a = poly_trim(F, a)
    if b and b[-1] == zero:
        b = poly_trim(F, b)
    while b:
        a, b = b, poly_divmod(F, a, b)[1]
    return poly_monic(F, a)


def poly_eval(F: "Field", a: tuple, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_deriv(F: "Field", a: tuple) -> tuple:
    return poly_trim(F, [F.mul(F.from_int(i), c) for i, c in enumerate(a)][1:])


def poly_pow_mod(F: "Field", a: tuple, e: int, m: tuple) -> tuple:
    result = (F.one,)
    base = poly_divmod(F, a, m)[1]
    while e:
        if e & 1:
            result = poly_divmod(F, poly_mul(F, result, base), m)[1]
        base = poly_divmod(F, poly_mul(F, base, base), m)[1]
        e >>= 1
    return result


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------


class Field:
    """Abstract exact field of characteristic ``p`` working on raw values."""

    kind: str
    p: int
    depth: int = 0
    order: int | None = None
    zero: Any
    one: Any

    # identity: fields compare by descriptor
    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    # scalar arithmetic -----------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def from_int(self, n: int):
        raise NotImplementedError

    def power(self, a, n: int):
        if n < 0:
            return self.power(self.inv(a), -n)
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def frob(self, a):
        """Return ``a**p``."""
        return self.power(a, self.p)

    def pth_power(self, a, e: int = 1):
        for _ in range(e):
            a = self.frob(a)
        return a

    # p-semilinear machinery --------------------------------------------------
    def p_monomials(self) -> list[tuple[int, ...]]:
        """Exponent tuples of the monomial p-basis of this field over its p-th powers."""
        raise NotImplementedError

    def monomial(self, m: tuple[int, ...]):
        raise NotImplementedError

    def p_basis_expand(self, a) -> dict[tuple[int, ...], Any]:
        """Return ``{m: g_m}`` with ``a == sum(g_m**p * m)``."""
        raise NotImplementedError

    def pth_root(self, a):
        """The p-th root of ``a`` if it lies in this field, else ``None``."""
        comps = self.p_basis_expand(a)
        root = None
        for m, g in comps.items():
            if any(m):
                if g != self.zero:
                    return None
            else:
                root = g
        return root

    # enumeration / sampling ---------------------------------------------------
    def elements(self) -> Iterator:
        raise InfiniteField(f"{self} is infinite")

    def random(self, rng: _random.Random, budget: int = 3, polynomial: bool = False):
        """Seeded element; ``polynomial`` restricts rational function fields
        to polynomials in each variable."""
        raise NotImplementedError

    # vector helpers (overridden by the prime-field fast path) ---------------
    def axpy(self, u, c, v) -> tuple:
        """``u + c*v`` for coordinate tuples."""
        add, mul = self.add, self.mul
        return tuple(add(a, mul(c, b)) for a, b in zip(u, v))

    def scale(self, c, v) -> tuple:
        mul = self.mul
        return tuple(mul(c, b) for b in v)

    def vadd(self, u, v) -> tuple:
        add = self.add
        return tuple(add(a, b) for a, b in zip(u, v))

    def vsub(self, u, v) -> tuple:
        sub = self.sub
        return tuple(sub(a, b) for a, b in zip(u, v))

    # serialization ----------------------------------------------------------
    def descriptor(self) -> dict:
        raise NotImplementedError

    def encode(self, a):
        raise NotImplementedError

    def decode(self, obj):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def __call__(self, value) -> "FieldScalar":
        if isinstance(value, int) and not isinstance(value, bool):
            return FieldScalar(self, self.from_int(value))
        return FieldScalar(self, value)

    def gen(self) -> "FieldScalar":
        raise NotImplementedError


class PrimeField(Field):
    """GF(p) with elements the ints ``0..p-1``."""

    kind = "gf"

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.f = 1
        self.order = p
        self.modulus = (0, 1)
        self.zero = 0
        self.one = 1
        self._inv = [0] + [pow(a, p - 2, p) for a in range(1, p)]

    def key(self):
        return ("gf", self.p, 1, self.modulus)

    def __repr__(self):
        return f"GF({self.p})"

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero in GF(%d)" % self.p)
        return self._inv[a]

    def from_int(self, n):
        return n % self.p

    def frob(self, a):
        return a

    def power(self, a, n):
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def p_monomials(self):
        return [()]

    def monomial(self, m):
        return 1

    def p_basis_expand(self, a):
        return {(): a}

    def pth_root(self, a):
        return a

    def elements(self):
        return iter(range(self.p))

    def random(self, rng, budget=3, polynomial=False):
        return rng.randrange(self.p)

    def axpy(self, u, c, v):
        p = self.p
        return tuple((a + c * b) % p for a, b in zip(u, v))

    def scale(self, c, v):
        p = self.p
        return tuple((c * b) % p for b in v)

    def vadd(self, u, v):
        p = self.p
        return tuple((a + b) % p for a, b in zip(u, v))

    def vsub(self, u, v):
        p = self.p
        return tuple((a - b) % p for a, b in zip(u, v))

    def descriptor(self):
        return {"kind": "gf", "p": self.p, "f": 1, "modulus": list(self.modulus)}

    def encode(self, a):
        return [a]

    def decode(self, obj):
        if isinstance(obj, list):
            if len(obj) != 1:
                raise ValueError(f"GF({self.p}) scalar must have 1 coordinate")
            obj = obj[0]
        return int(obj) % self.p

    def format(self, a):
        return str(a)

    def gen(self):
        return FieldScalar(self, 1)


class ExtensionField(Field):
    """GF(p^f) as F_p[g]/(modulus); elements are ints whose base-p digits are
    the coefficients of 1, g, g^2, ... ."""

    kind = "gf"

    def __init__(self, p: int, f: int, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if f < 2:
            raise ValueError("use PrimeField for f = 1")
        if modulus is None:
            if (p, f) not in MODULI:
                raise ValueError(f"no shipped modulus for GF({p}^{f}); supply one")
            modulus = MODULI[(p, f)]
        modulus = tuple(int(c) % p for c in modulus)
        Fp = prime_field(p)
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise NotIrreducible(f"modulus must be monic of degree {f}")
        if not is_irreducible(Fp, modulus):
            raise NotIrreducible(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.f = f
        self.order = q = p ** f
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        self._Fp = Fp
        self._build_tables()
        self._add = None
        if p != 2 and q <= 729:
            self._add = [[self._digit_add(a, b) for b in range(q)] for a in range(q)]

    def key(self):
        return ("gf", self.p, self.f, self.modulus)

    def __repr__(self):
        return f"GF({self.p}^{self.f})"

    # int <-> coefficient conversion
    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.f):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, ds) -> int:
        a = 0
        for d in reversed(list(ds)):
            a = a * self.p + d
        return a

    def _digit_add(self, a, b):
        p = self.p
        out, place = 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * place
            place *= p
        return out

    def _poly_mulmod(self, a: list[int], b: list[int]) -> list[int]:
        p, f, m = self.p, self.f, self.modulus
        prod = [0] * (2 * f - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for k in range(len(prod) - 1, f - 1, -1):
            c = prod[k]
            if c:
                for j in range(f + 1):
                    prod[k - f + j] = (prod[k - f + j] - c * m[j]) % p
        return prod[:f]

    def _build_tables(self):
        q = self.order
        for cand in range(2, q):
            cd = self._digits(cand)
            exp = [1]
            cur = self._digits(1)
            ok = True
            for _ in range(q - 2):
                cur = self._poly_mulmod(cur, cd)
                v = self._undigits(cur)
                if v == 1 or v == 0:
                    ok = False
                    break
                exp.append(v)
            if ok and self._undigits(self._poly_mulmod(cur, cd)) == 1:
                break
        else:  # pragma: no cover - q=2 never reaches here
            raise NotIrreducible("no primitive element found")
        self._exp = exp + exp
        self._log = [0] * q
        for i, v in enumerate(exp):
            self._log[v] = i

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add is not None:
            return self._add[a][b]
        return self._digit_add(a, b)

    def neg(self, a):
        if self.p == 2:
            return a
        return self._undigits((-d) % self.p for d in self._digits(a))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"inverse of zero in {self!r}")
        return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]

    def power(self, a, n):
        if a == 0:
            if n < 0:
                raise DivisionByZero("0 to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % (self.order - 1)]

    def from_int(self, n):
        return n % self.p

    def p_monomials(self):
        return [()]

    def monomial(self, m):
        return 1

    def pth_root(self, a):
        return self.power(a, self.p ** (self.f - 1))

    def p_basis_expand(self, a):
        return {(): self.pth_root(a)}

    def elements(self):
        return iter(range(self.order))

    def random(self, rng, budget=3, polynomial=False):
        return rng.randrange(self.order)

    def descriptor(self):
        return {"kind": "gf", "p": self.p, "f": self.f, "modulus": list(self.modulus)}

    def encode(self, a):
        return self._digits(a)

    def decode(self, obj):
        if isinstance(obj, int):
            return obj % self.p
        if len(obj) != self.f:
            raise ValueError(f"{self!r} scalar needs {self.f} coordinates")
        return self._undigits(int(c) % self.p for c in obj)

    def format(self, a):
        terms = []
        for i, d in enumerate(self._digits(a)):
            if d == 0:
                continue
            mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            if not mono:
                terms.append(str(d))
            else:
                terms.append(mono if d == 1 else f"{d}*{mono}")
        return "+".join(terms) if terms else "0"

    def gen(self):
        return FieldScalar(self, self.p)


class RationalFunctionField(Field):
    """``base(var)``; raw values are ``(num, den)`` in lowest terms with monic
    denominator, both polynomials over ``base``."""

    kind = "rf"

    def __init__(self, base: Field, var: str = "t"):
        if base.depth + 1 > MAX_TOWER_DEPTH:
            raise UnsupportedTower(f"rational-function towers deeper than {MAX_TOWER_DEPTH}")
        self.base = base
        self.var = var
        self.p = base.p
        self.depth = base.depth + 1
        self.order = None
        self.zero = ((), (base.one,))
        self.one = ((base.one,), (base.one,))

    def key(self):
        return ("rf", self.base.key(), self.var)

    def __repr__(self):
        return f"{self.base!r}({self.var})"

    def _make(self, num: tuple, den: tuple):
        B = self.base
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            return self.zero
        if len(den) > 1:
            g = poly_gcd(B, num, den)
            if len(g) > 1:
                num = poly_divmod(B, num, g)[0]
                den = poly_divmod(B, den, g)[0]
        lead = den[-1]
        if lead != B.one:
            inv = B.inv(lead)
            num = poly_scale(B, inv, num)
            den = poly_scale(B, inv, den)
        return (num, den)

    def fraction(self, num, den=None):
        """Build a canonical element from polynomial coefficient sequences."""
        B = self.base
        num = poly_trim(B, num)
        den = (B.one,) if den is None else poly_trim(B, den)
        return self._make(num, den)

    def embed(self, c):
        """Constant from the base field."""
        if c == self.base.zero:
            return self.zero
        return ((c,), (self.base.one,))

    def add(self, a, b):
        B = self.base
        (an, ad), (bn, bd) = a, b
        if not an:
            return b
        if not bn:
            return a
        one = (B.one,)
        if ad == bd:
            return self._make(poly_add(B, an, bn), ad)
        # only factors of gcd(ad, bd) can cancel in the sum
        g = poly_gcd(B, ad, bd) if len(ad) > 1 and len(bd) > 1 else one
        if len(g) == 1:
            return self._make_coprime(poly_add(B, poly_mul(B, an, bd), poly_mul(B, bn, ad)), poly_mul(B, ad, bd))
        adg, bdg = poly_divmod(B, ad, g)[0], poly_divmod(B, bd, g)[0]
        num = poly_add(B, poly_mul(B, an, bdg), poly_mul(B, bn, adg))
        if not num:
            return self.zero
        h = poly_gcd(B, num, g)
        if len(h) > 1:
            num = poly_divmod(B, num, h)[0]
            g = poly_divmod(B, g, h)[0]
        return (num, poly_mul(B, poly_mul(B, adg, bdg), g))

    def _make_coprime(self, num: tuple, den: tuple):
        """Canonical form when ``num`` and ``den`` are known coprime and ``den`` monic."""
        return (num, den) if num else self.zero

    def neg(self, a):
        return (poly_neg(self.base, a[0]), a[1])

    def mul(self, a, b):
        B = self.base
        (an, ad), (bn, bd) = a, b
        if not an or not bn:
            return self.zero
        one = (B.one,)
        if ad == one and bd == one:
            return (poly_mul(B, an, bn), ad)
        # cross-cancel so that only the small gcds are computed
        if len(bd) > 1 and len(an) > 1:
            g = poly_gcd(B, an, bd)
            if len(g) > 1:
                an, bd = poly_divmod(B, an, g)[0], poly_divmod(B, bd, g)[0]
        if len(ad) > 1 and len(bn) > 1:
            g = poly_gcd(B, bn, ad)
            if len(g) > 1:
                bn, ad = poly_divmod(B, bn, g)[0], poly_divmod(B, ad, g)[0]
        return (poly_mul(B, an, bn), poly_mul(B, ad, bd))

    def inv(self, a):
        num, den = a
        if not num:
            raise DivisionByZero(f"inverse of zero in {self!r}")
        return self._make(den, num)

    def from_int(self, n):
        return self.embed(self.base.from_int(n))

    def _frob_poly(self, a: tuple) -> tuple:
        B = self.base
        out = [B.zero] * ((len(a) - 1) * self.p + 1) if a else []
        for i, c in enumerate(a):
            out[i * self.p] = B.frob(c)
        return tuple(out)

    def frob(self, a):
        num, den = a
        return (self._frob_poly(num), self._frob_poly(den))

    def p_monomials(self):
        return [m + (r,) for m in self.base.p_monomials() for r in range(self.p)]

    def monomial(self, m):
        B = self.base
        *inner, r = m
        c = B.monomial(tuple(inner))
        return ((B.zero,) * r + (c,), (B.one,))

    def p_basis_expand(self, a):
        B, p = self.base, self.p
        num, den = a
        w = poly_mul(B, num, self._poly_power(den, p - 1))
        comps: dict[tuple[int, ...], Any] = {}
        base_monos = B.p_monomials()
        for r in range(p):
            coeff_exp = [B.p_basis_expand(w[k]) for k in range(r, len(w), p)]
            for mu in base_monos:
                gnum = tuple(e.get(mu, B.zero) for e in coeff_exp)
                comps[mu + (r,)] = self._make(poly_trim(B, gnum), den)
        return comps

    def _poly_power(self, a: tuple, n: int) -> tuple:
        B = self.base
        out = (B.one,)
        for _ in range(n):
            out = poly_mul(B, out, a)
        return out

    def random(self, rng, budget=3, polynomial=False):
        B = self.base
        inner = min(budget, 1)
        dn = rng.randint(0, budget)
        num = poly_trim(B, [B.random(rng, inner, polynomial) for _ in range(dn + 1)])
        if polynomial:
            return self._make(num, (B.one,))
        dd = rng.randint(0, budget)
        den = poly_trim(B, [B.random(rng, inner) for _ in range(dd + 1)])
        if not den:
            den = (B.one,)
        return self._make(num, den)

    def descriptor(self):
        return {"kind": "rf", "base": self.base.descriptor(), "var": self.var}

    def encode(self, a):
        B = self.base
        return {"num": [B.encode(c) for c in a[0]], "den": [B.encode(c) for c in a[1]]}

    def decode(self, obj):
        B = self.base
        if isinstance(obj, int):
            return self.from_int(obj)
        num = [B.decode(c) for c in obj["num"]]
        den = [B.decode(c) for c in obj.get("den", [[1]] if B.depth == 0 else [1])]
        return self.fraction(num, den)

    def _format_poly(self, a: tuple) -> str:
        B = self.base
        if not a:
            return "0"
        terms = []
        for i, c in enumerate(a):
            if c == B.zero:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            cs = B.format(c)
            if B.depth > 0 or ("+" in cs and mono):
                cs = f"({cs})"
            if not mono:
                terms.append(cs)
            elif c == B.one:
                terms.append(mono)
            else:
                terms.append(f"{cs}*{mono}")
        return "+".join(reversed(terms))

    def format(self, a):
        num, den = a
        ns = self._format_poly(num)
        if den == (self.base.one,):
            return ns
        return f"({ns})/({self._format_poly(den)})"

    def gen(self):
        B = self.base
        return FieldScalar(self, ((B.zero, B.one), (B.one,)))


# ---------------------------------------------------------------------------
# construction helpers
# ---------------------------------------------------------------------------

_FIELD_CACHE: dict = {}


def prime_field(p: int) -> PrimeField:
    key = ("gf", p)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = PrimeField(p)
    return _FIELD_CACHE[key]


def GF(p: int, f: int = 1, modulus=None) -> Field:
    """The finite field with ``p**f`` elements (cached per descriptor)."""
    if f == 1:
        return prime_field(p)
    key = ("gf", p, f, tuple(modulus) if modulus is not None else None)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = ExtensionField(p, f, modulus)
    return _FIELD_CACHE[key]


def RF(base: Field, var: str = "t") -> RationalFunctionField:
    key = ("rf", base.key(), var)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = RationalFunctionField(base, var)
    return _FIELD_CACHE[key]


def is_irreducible(F: Field, poly: tuple) -> bool:
    """Trial division by all monic polynomials up to half the degree (finite F)."""
    poly = poly_trim(F, poly)
    d = len(poly) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    elems = list(F.elements())
    for k in range(1, d // 2 + 1):
        for low in itertools.product(elems, repeat=k):
            if not poly_divmod(F, poly, tuple(low) + (F.one,))[1]:
                return False
    return True


def find_irreducible(F: Field, degree: int) -> tuple:
    """Least monic irreducible polynomial of the given degree over finite F."""
    if isinstance(F, PrimeField) and (F.p, degree) in MODULI:
        return MODULI[(F.p, degree)]
    elems = list(F.elements())
    for low in itertools.product(elems, repeat=degree):
        cand = tuple(low) + (F.one,)
        if is_irreducible(F, cand):
            return cand
    raise NotIrreducible(f"no irreducible of degree {degree}")  # pragma: no cover


def field_from_descriptor(desc: dict) -> Field:
    kind = desc.get("kind")
    if kind == "gf":
        f = int(desc.get("f", 1))
        modulus = desc.get("modulus")
        if f == 1:
            return prime_field(int(desc["p"]))
        return GF(int(desc["p"]), f, tuple(modulus) if modulus is not None else None)
    if kind == "rf":
        return RF(field_from_descriptor(desc["base"]), desc.get("var", "t"))
    raise ValueError(f"unknown field kind {kind!r}")


# ---------------------------------------------------------------------------
# user-facing scalars
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldScalar:
    field: Field
    value: Any

    def _coerce(self, other) -> Any:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise DescriptorMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return FieldScalar(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return FieldScalar(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return FieldScalar(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return FieldScalar(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return FieldScalar(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def __pow__(self, n: int):
        return FieldScalar(self.field, self.field.power(self.value, n))

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.field.from_int(other)
        return isinstance(other, FieldScalar) and self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def is_zero(self) -> bool:
        return self.value == self.field.zero

    def __repr__(self):
        return self.field.format(self.value)


_OPS = {"add": "add", "sub": "sub", "mul": "mul", "div": "div"}


def scalar_arith(a: FieldScalar, b: FieldScalar, op: str) -> FieldScalar:
    if a.field != b.field:
        raise DescriptorMismatch(f"{a.field!r} vs {b.field!r}")
    if op not in _OPS:
        raise ValueError(f"unknown op {op!r}")
    return FieldScalar(a.field, getattr(a.field, _OPS[op])(a.value, b.value))


def pth_power(a: FieldScalar, e: int = 1) -> FieldScalar:
    return FieldScalar(a.field, a.field.pth_power(a.value, e))


def p_basis_expand(a: FieldScalar) -> dict[tuple[int, ...], FieldScalar]:
    F = a.field
    return {m: FieldScalar(F, g) for m, g in F.p_basis_expand(a.value).items()}


def p_basis_reconstruct(F: Field, comps: dict) -> FieldScalar:
    acc = F.zero
    for m, g in comps.items():
        g = g.value if isinstance(g, FieldScalar) else g
        acc = F.add(acc, F.mul(F.frob(g), F.monomial(m)))
    return FieldScalar(F, acc)


def is_pth_power(a: FieldScalar) -> tuple[bool, FieldScalar | None]:
    root = a.field.pth_root(a.value)
    if root is None:
        return False, None
    return True, FieldScalar(a.field, root)


def enumerate_scalars(F: Field) -> Iterator[FieldScalar]:
    for v in F.elements():
        yield FieldScalar(F, v)


def random_scalar(F: Field, budget: int = 3, seed: int | None = 0) -> FieldScalar:
    return FieldScalar(F, F.random(_random.Random(seed), budget))
