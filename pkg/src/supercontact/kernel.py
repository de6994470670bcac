"""Exact arithmetic in a free Z2-graded commutative algebra.

Every value the package manipulates (superfields, differential forms, vector
field components) is a :class:`SuperExpr`: a finite sum of monomials with
Gaussian-rational coefficients.  Odd generators anticommute and square to
zero; even generators commute.  Monomials are stored in a canonical form so
that equality of expressions is equality of dictionaries.

Canonical generator order (the ``rank`` of a generator, then name, then
derivative order)::

    0  even coordinates            t
    1  even functions of t         q, b, a, c, ...
    2  even differentials          dth, dthb
    3  even parameters             lam, solver unknowns
    4  odd coordinates             th, thb
    5  odd differentials           dt
    6  odd constants               eps, epsb, solver unknowns
    7  odd functions of t          psi, psib, chi, ...
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__


class KernelError(ValueError):
    pass


# --------------------------------------------------------------------------
# Coefficients
# --------------------------------------------------------------------------


class Coefficient:
    """Exact Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def coerce(cls, value) -> "Coefficient":
        if isinstance(value, Coefficient):
            return value
        if isinstance(value, (int, Fraction, Rational)):
            return cls(Fraction(value))
        raise TypeError(f"cannot use {value!r} as an exact coefficient")

    def __add__(self, other):
        other = Coefficient.coerce(other)
        return Coefficient(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = Coefficient.coerce(other)
        return Coefficient(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return Coefficient.coerce(other) - self

    def __neg__(self):
        return Coefficient(-self.re, -self.im)

    def __mul__(self, other):
        other = Coefficient.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Coefficient(a * c, b)
        return Coefficient(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Coefficient":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero coefficient")
        return Coefficient(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        return self * Coefficient.coerce(other).inverse()

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Coefficient({self.re}, {self.im})"


ONE = Coefficient(1)
I = Coefficient(0, 1)


# --------------------------------------------------------------------------
# Generators
# --------------------------------------------------------------------------

COORD, FUNC, DIFF, PARAM, CONST = "coordinate", "function", "differential", "parameter", "constant"


@dataclass(frozen=True, eq=False)
class Generator:
    """A free generator of the algebra.

    ``kind`` is one of ``coordinate``, ``differential``, ``constant`` (odd),
    ``parameter`` (even) or ``function`` (a formal function of t with a
    derivative ``order``).  ``base`` names the coordinate a differential is
    attached to.
    """

    name: str
    kind: str
    parity: Parity
    order: int = 0
    base: str | None = None
    key: tuple = field(init=False, repr=False)
    _ident: tuple = field(init=False, repr=False)
    _hash: int = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "parity", Parity(self.parity))
        object.__setattr__(self, "key", (_rank(self.kind, self.parity), self.name, self.order))
        ident = (self.name, self.kind, int(self.parity), self.order, self.base)
        object.__setattr__(self, "_ident", ident)
        object.__setattr__(self, "_hash", hash(ident))

    # generators are hashed constantly, so the hash is computed once
    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Generator):
            return NotImplemented
        return self._hash == other._hash and self._ident == other._ident

    @property
    def is_odd(self) -> bool:
        return self.parity == Parity.ODD

    def derivative(self) -> "Generator":
        if self.kind != FUNC:
            raise KernelError(f"{self.name} is not a function of t")
        return Generator(self.name, FUNC, self.parity, self.order + 1)

    def __lt__(self, other):
        return self.key < other.key

    def __str__(self):
        if self.kind == FUNC:
            return f"{self.name}{chr(39) * self.order}(t)"
        return self.name


def _rank(kind: str, parity: int) -> int:
    if parity == 0:
        return {COORD: 0, FUNC: 1, DIFF: 2, PARAM: 3, CONST: 3}[kind]
    return {COORD: 4, DIFF: 5, CONST: 6, PARAM: 6, FUNC: 7}[kind]


def coordinate(name: str, parity: int) -> Generator:
    return Generator(name, COORD, parity)


def differential(coord: Generator) -> Generator:
    return Generator("d" + coord.name, DIFF, coord.parity + 1, base=coord.name)


def function(name: str, parity: int, order: int = 0) -> Generator:
    return Generator(name, FUNC, parity, order)


def odd_constant(name: str) -> Generator:
    return Generator(name, CONST, Parity.ODD)


def parameter(name: str) -> Generator:
    return Generator(name, PARAM, Parity.EVEN)


# --------------------------------------------------------------------------
# Canonical monomials
# --------------------------------------------------------------------------

# A monomial key is (evens, odds): evens a tuple of (Generator, exponent)
# sorted by generator key, odds a strictly increasing tuple of Generators.
MonoKey = tuple


def _sort_odds(odds: Iterable[Generator]) -> tuple[int, tuple | None]:
    """Sort odd factors, returning (sign, sorted) or (0, None) on a repeat."""
    items = list(odds)
    sign = 1
    # insertion sort: each swap of adjacent odd factors is one Koszul sign
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j].key < items[j - 1].key:
            items[j], items[j - 1] = items[j - 1], items[j]
            sign = -sign
            j -= 1
        if j > 0 and items[j].key == items[j - 1].key:
            return 0, None
    return sign, tuple(items)


def _merge_odds(a: tuple, b: tuple) -> tuple[int, tuple | None]:
    """Concatenate two sorted odd sequences a*b and re-sort with signs."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    out = []
    sign = 1
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ka, kb = a[i].key, b[j].key
        if ka < kb:
            out.append(a[i])
            i += 1
        elif kb < ka:
            out.append(b[j])
            if (na - i) & 1:
                sign = -sign
            j += 1
        else:
            return 0, None
    out.extend(a[i:])
    out.extend(b[j:])
    return sign, tuple(out)


def _merge_evens(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    acc: dict[Generator, int] = dict(a)
    for g, k in b:
        acc[g] = acc.get(g, 0) + k
    return tuple(sorted(acc.items(), key=lambda item: item[0].key))


def _evens_from(factors: Mapping[Generator, int]) -> tuple:
    return tuple(sorted(((g, k) for g, k in factors.items() if k), key=lambda item: item[0].key))


# --------------------------------------------------------------------------
# SuperExpr
# --------------------------------------------------------------------------

Scalar = Union[int, Fraction, Coefficient]


class SuperExpr:
    """An element of the free graded-commutative algebra, in canonical form.

    Instances are immutable; ``terms`` maps monomial keys to nonzero
    coefficients.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[MonoKey, Coefficient] | None = None):
        self.terms: dict[MonoKey, Coefficient] = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def const(cls, value: Scalar) -> "SuperExpr":
        c = Coefficient.coerce(value)
        return cls({((), ()): c}) if c else cls()

    @classmethod
    def gen(cls, g: Generator) -> "SuperExpr":
        if g.is_odd:
            return cls({((), (g,)): ONE})
        return cls({(((g, 1),), ()): ONE})

    @classmethod
    def lift(cls, value) -> "SuperExpr":
        if isinstance(value, SuperExpr):
            return value
        if isinstance(value, Generator):
            return cls.gen(value)
        return cls.const(value)

    # inspection ---------------------------------------------------------

    def __iter__(self) -> Iterator[tuple[MonoKey, Coefficient]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Coefficient)):
            other = SuperExpr.const(other)
        if not isinstance(other, SuperExpr):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def generators(self) -> set[Generator]:
        out = set()
        for (evens, odds) in self.terms:
            out.update(g for g, _ in evens)
            out.update(odds)
        return out

    def is_constant(self) -> bool:
        return all(key == ((), ()) for key in self.terms)

    def constant_term(self) -> Coefficient:
        return self.terms.get(((), ()), Coefficient(0))

    @property
    def parity(self) -> Parity | None:
        return parity_of(self)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return SuperExpr(out)

    __radd__ = __add__

    def __neg__(self):
        return SuperExpr({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(other, self)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise KernelError("exponent must be a nonnegative integer")
        out = SuperExpr.const(1)
        for _ in range(k):
            out = mul(out, self)
        return out

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mul(self, invert(other))

    def scale(self, c: Scalar) -> "SuperExpr":
        c = Coefficient.coerce(c)
        if not c:
            return SuperExpr()
        return SuperExpr({k: v * c for k, v in self.terms.items()})

    def __str__(self):
        from .syntax import print_canonical

        return print_canonical(self)

    def __repr__(self):
        return f"SuperExpr({self})"


def _coerce(value):
    if isinstance(value, SuperExpr):
        return value
    if isinstance(value, Generator):
        return SuperExpr.gen(value)
    if isinstance(value, (int, Fraction, Coefficient)):
        return SuperExpr.const(value)
    return NotImplemented


ZERO = SuperExpr()


def mul(a: SuperExpr, b: SuperExpr) -> SuperExpr:
    """Graded product ``a*b`` (odd factors of ``a`` stay to the left)."""
    out: dict[MonoKey, Coefficient] = {}
    for (ea, oa), ca in a.terms.items():
        for (eb, ob), cb in b.terms.items():
            sign, odds = _merge_odds(oa, ob)
            if not sign:
                continue
            key = (_merge_evens(ea, eb), odds)
            c = ca * cb
            if sign < 0:
                c = -c
            if key in out:
                out[key] = out[key] + c
            else:
                out[key] = c
    return SuperExpr(out)


def parity_of(e: SuperExpr) -> Parity | None:
    """Parity of a homogeneous expression; ``None`` when mixed.  Zero is even."""
    parities = {len(odds) & 1 for (_, odds) in e.terms}
    if len(parities) > 1:
        return None
    return Parity(parities.pop()) if parities else Parity.EVEN


def monomial(coeff: Scalar, factors: Iterable[Generator]) -> SuperExpr:
    """The product ``coeff * f1 * f2 * ...`` in the given left-to-right order."""
    c = Coefficient.coerce(coeff)
    evens: dict[Generator, int] = {}
    odds = []
    for g in factors:
        if g.is_odd:
            odds.append(g)
        else:
            evens[g] = evens.get(g, 0) + 1
    sign, sorted_odds = _sort_odds(odds)
    if not sign or not c:
        return SuperExpr()
    return SuperExpr({(_evens_from(evens), sorted_odds): c if sign > 0 else -c})


# --------------------------------------------------------------------------
# Raw term trees
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int


@dataclass(frozen=True)
class Quotient:
    num: object
    den: object


def canonicalize(raw) -> SuperExpr:
    """Evaluate a finite ``Sum``/``Product``/``Neg`` tree to canonical form."""
    if isinstance(raw, SuperExpr):
        return raw
    if isinstance(raw, Generator):
        return SuperExpr.gen(raw)
    if isinstance(raw, (int, Fraction, Coefficient)):
        return SuperExpr.const(raw)
    if isinstance(raw, Sum):
        out = SuperExpr()
        for t in raw.terms:
            out = out + canonicalize(t)
        return out
    if isinstance(raw, Product):
        out = SuperExpr.const(1)
        for f in raw.factors:
            out = mul(out, canonicalize(f))
        return out
    if isinstance(raw, Neg):
        return -canonicalize(raw.arg)
    if isinstance(raw, Power):
        return canonicalize(raw.base) ** raw.exponent
    if isinstance(raw, Quotient):
        return mul(canonicalize(raw.num), invert(canonicalize(raw.den)))
    raise TypeError(f"not a term tree: {raw!r}")


def as_tree(e: SuperExpr) -> Sum:
    """The raw tree ``sum c * g1 * g2 * ...`` spelling out a canonical form."""
    terms = []
    for (evens, odds), c in e.terms.items():
        factors = [c] + [g for g, k in evens for _ in range(k)] + list(odds)
        terms.append(Product(tuple(factors)))
    return Sum(tuple(terms))


# --------------------------------------------------------------------------
# Derivations and maps
# --------------------------------------------------------------------------


def left_partial(g: Generator, e: SuperExpr) -> SuperExpr:
    """Left derivative: move ``g`` to the front (Koszul signs) and strip it."""
    out: dict[MonoKey, Coefficient] = {}
    if g.is_odd:
        for (evens, odds), c in e.terms.items():
            for pos, h in enumerate(odds):
                if h == g:
                    key = (evens, odds[:pos] + odds[pos + 1 :])
                    out[key] = -c if pos & 1 else c
                    break
    else:
        for (evens, odds), c in e.terms.items():
            for pos, (h, k) in enumerate(evens):
                if h == g:
                    rest = evens[:pos] + (((h, k - 1),) if k > 1 else ()) + evens[pos + 1 :]
                    out[(rest, odds)] = c * k
                    break
    return SuperExpr(out)


def _is_time(g: Generator) -> bool:
    return g.kind == COORD and g.name == "t" and not g.is_odd


def time_derivative(e: SuperExpr) -> SuperExpr:
    """Total derivative in t: t -> 1, f^(k)(t) -> f^(k+1)(t), everything else constant."""
    out = SuperExpr()
    for (evens, odds), c in e.terms.items():
        for pos, (h, k) in enumerate(evens):
            if _is_time(h) or h.kind == FUNC:
                rest = dict(evens)
                if k > 1:
                    rest[h] = k - 1
                else:
                    del rest[h]
                if h.kind == FUNC:
                    dh = h.derivative()
                    rest[dh] = rest.get(dh, 0) + 1
                out = out + SuperExpr({(_evens_from(rest), odds): c * k})
        for pos, h in enumerate(odds):
            if h.kind == FUNC:
                replaced = odds[:pos] + (h.derivative(),) + odds[pos + 1 :]
                sign, sorted_odds = _sort_odds(replaced)
                if sign:
                    out = out + SuperExpr({(evens, sorted_odds): c if sign > 0 else -c})
    return out


def body(e: SuperExpr) -> SuperExpr:
    """Set every odd generator to zero except differentials (dt survives)."""
    keep = {}
    for key, c in e.terms.items():
        if all(g.kind == DIFF for g in key[1]):
            keep[key] = c
    return SuperExpr(keep)


def invert(e: SuperExpr) -> SuperExpr:
    """Inverse of an even element whose body is a nonzero constant."""
    if parity_of(e) != Parity.EVEN:
        raise KernelError("body not a nonzero constant (argument not even)")
    b = body(e)
    if not b.is_constant() or not b:
        raise KernelError("body not a nonzero constant")
    c_inv = b.constant_term().inverse()
    nil = (e - b).scale(c_inv)
    if not nil:
        return SuperExpr.const(c_inv)
    # geometric series in the nilpotent part: sum_k (-nil)^k
    out = SuperExpr.const(1)
    power = SuperExpr.const(1)
    minus_nil = -nil
    while True:
        power = mul(power, minus_nil)
        if not power:
            break
        out = out + power
    return out.scale(c_inv)


def substitute(e: SuperExpr, mapping: Mapping[Generator, SuperExpr]) -> SuperExpr:
    """Simultaneous substitution of generators by homogeneous expressions."""
    images = {}
    for g, img in mapping.items():
        img = SuperExpr.lift(img)
        p = parity_of(img)
        if p is None or (img and p != g.parity):
            raise KernelError(f"parity mismatch in substitution for {g}")
        images[g] = img
    if not images:
        return e
    powers: dict[tuple[Generator, int], SuperExpr] = {}

    def image_power(g, k):
        if (g, k) not in powers:
            powers[(g, k)] = images[g] ** k
        return powers[(g, k)]

    out = SuperExpr()
    for (evens, odds), c in e.terms.items():
        touched = any(g in images for g, _ in evens) or any(g in images for g in odds)
        if not touched:
            out = out + SuperExpr({(evens, odds): c})
            continue
        kept_evens = tuple((g, k) for g, k in evens if g not in images)
        acc = SuperExpr({(kept_evens, ()): c})
        for g, k in evens:
            if g in images:
                acc = mul(acc, image_power(g, k))
        for g in odds:
            acc = mul(acc, images[g] if g in images else SuperExpr.gen(g))
        out = out + acc
    return out


def split_left(e: SuperExpr, selected) -> dict[MonoKey, SuperExpr]:
    """Write ``e = sum_m m * r_m`` where ``m`` is built only from generators
    satisfying ``selected`` and ``r_m`` contains none of them.

    Returns ``{key(m): r_m}``.
    """
    out: dict[MonoKey, dict] = {}
    for (evens, odds), c in e.terms.items():
        sel_e = tuple((g, k) for g, k in evens if selected(g))
        rest_e = tuple((g, k) for g, k in evens if not selected(g))
        sel_o, rest_o = [], []
        sign = 1
        for g in odds:
            if selected(g):
                # moves past every unselected odd factor already seen
                if len(rest_o) & 1:
                    sign = -sign
                sel_o.append(g)
            else:
                rest_o.append(g)
        key = (sel_e, tuple(sel_o))
        bucket = out.setdefault(key, {})
        rkey = (rest_e, tuple(rest_o))
        val = c if sign > 0 else -c
        bucket[rkey] = bucket[rkey] + val if rkey in bucket else val
    return {k: SuperExpr(v) for k, v in out.items() if SuperExpr(v)}


def key_expr(key: MonoKey) -> SuperExpr:
    return SuperExpr({key: ONE})
