"""Finite graded Lie algebras, Lie-valued superfunctions and Maurer-Cartan forms.

Lie-valued quantities are stored as ``{basis symbol: coefficient}`` and read
as ``sum f_a (x) e_a`` with the coefficient to the left of the basis element.
Moving ``e_a`` past a coefficient ``g`` costs ``(-1)^{|a||g|}``, so

    [f (x) a, g (x) b] = (-1)^{|a||g|} (f g) (x) [a, b].

The Maurer-Cartan form of ``g = exp(X)`` is obtained from the Hadamard series

    exp(-X) d exp(X) = sum_n (-ad_X)^n (dX) / (n+1)!

which terminates for nilpotent presentations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial

from .calculus import R1N1, R1N2, Chart, exterior_derivative
from .kernel import I, Coefficient, Parity, SuperExpr, mul


class LieError(ValueError):
    pass


Bracket = dict[str, Coefficient]


@dataclass(frozen=True)
class LieAlgebraPresentation:
    name: str
    basis: tuple[tuple[str, Parity], ...]
    brackets: dict[tuple[str, str], Bracket] = field(compare=False)
    exponent: dict[str, SuperExpr] | None = field(default=None, compare=False)
    stabilizer: frozenset[str] = frozenset()

    @property
    def symbols(self) -> list[str]:
        return [s for s, _ in self.basis]

    def parity(self, symbol: str) -> Parity:
        for s, p in self.basis:
            if s == symbol:
                return p
        raise LieError(f"unknown basis symbol {symbol!r}")

    def bracket(self, a: str, b: str) -> Bracket:
        return self.brackets.get((a, b), {})


def _combine(acc: Bracket, other: Bracket, scale) -> None:
    for k, v in other.items():
        acc[k] = acc.get(k, Coefficient(0)) + v * scale


def _clean(d: Bracket) -> Bracket:
    return {k: v for k, v in d.items() if v}


def presentation(name: str, basis, brackets, exponent=None, stabilizer=()) -> LieAlgebraPresentation:
    """Build a presentation from the given brackets, completing them by graded
    antisymmetry and checking graded Jacobi on every basis triple."""
    basis = tuple((s, Parity(p)) for s, p in basis)
    parity = dict(basis)
    table: dict[tuple[str, str], Bracket] = {}
    for (a, b), rhs in brackets.items():
        for sym in (a, b, *rhs):
            if sym not in parity:
                raise LieError(f"unknown basis symbol {sym!r}")
        rhs = _clean({k: Coefficient.coerce(v) for k, v in rhs.items()})
        for k in rhs:
            if parity[k] != parity[a] + parity[b]:
                raise LieError(f"bracket [{a},{b}] does not respect parity")
        sign = -1 if parity[a] & parity[b] else 1
        # [b, a] = -(-1)^{|a||b|} [a, b]
        mirrored = _clean({k: v * (-sign) for k, v in rhs.items()})
        for key, val in (((a, b), rhs), ((b, a), mirrored)):
            if key in table and table[key] != val:
                raise LieError(f"bracket [{key[0]},{key[1]}] violates graded antisymmetry")
            table[key] = val
    for s, p in basis:
        if p == Parity.EVEN and table.get((s, s)):
            raise LieError(f"[{s},{s}] must vanish for an even element")
    pres = LieAlgebraPresentation(name, basis, {k: v for k, v in table.items() if v}, exponent, frozenset(stabilizer))
    for s in stabilizer:
        pres.parity(s)
    _check_jacobi(pres)
    return pres


def _bracket_vec(pres: LieAlgebraPresentation, a: str, vec: Bracket) -> Bracket:
    out: Bracket = {}
    for b, c in vec.items():
        _combine(out, pres.bracket(a, b), c)
    return _clean(out)


def _vec_bracket(pres: LieAlgebraPresentation, vec: Bracket, c_sym: str) -> Bracket:
    out: Bracket = {}
    for b, c in vec.items():
        _combine(out, pres.bracket(b, c_sym), c)
    return _clean(out)


def _check_jacobi(pres: LieAlgebraPresentation) -> None:
    # [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
    for a, b, c in product(pres.symbols, repeat=3):
        lhs = _bracket_vec(pres, a, pres.bracket(b, c))
        rhs = _vec_bracket(pres, pres.bracket(a, b), c)
        sign = -1 if pres.parity(a) & pres.parity(b) else 1
        _combine(rhs, _bracket_vec(pres, b, pres.bracket(a, c)), sign)
        if _clean(lhs) != _clean(rhs):
            raise LieError(f"graded Jacobi fails on ({a}, {b}, {c})")


# --------------------------------------------------------------------------
# Lie-valued expressions
# --------------------------------------------------------------------------


class LieValuedExpr:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: LieAlgebraPresentation, terms: dict[str, SuperExpr] | None = None):
        self.algebra = algebra
        cleaned = {}
        for s, f in (terms or {}).items():
            algebra.parity(s)
            f = SuperExpr.lift(f)
            if f:
                cleaned[s] = f
        self.terms: dict[str, SuperExpr] = cleaned

    def __getitem__(self, symbol: str) -> SuperExpr:
        self.algebra.parity(symbol)
        return self.terms.get(symbol, SuperExpr())

    def __eq__(self, other):
        return isinstance(other, LieValuedExpr) and self.algebra == other.algebra and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "LieValuedExpr") -> "LieValuedExpr":
        out = dict(self.terms)
        for s, f in other.terms.items():
            out[s] = out.get(s, SuperExpr()) + f
        return type(self)(self.algebra, out)

    def __neg__(self):
        return type(self)(self.algebra, {s: -f for s, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LieValuedExpr":
        c = SuperExpr.lift(c)
        return type(self)(self.algebra, {s: mul(c, f) for s, f in self.terms.items()})

    def map_coefficients(self, fn, cls=None) -> "LieValuedExpr":
        return (cls or type(self))(self.algebra, {s: fn(f) for s, f in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({f})*{s}" for s, f in sorted(self.terms.items(), key=lambda kv: self.algebra.symbols.index(kv[0])))

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class LieValuedForm(LieValuedExpr):
    """A Lie-valued expression whose coefficients are one-forms."""


def _split_parity(f: SuperExpr) -> dict[int, SuperExpr]:
    parts: dict[int, dict] = {}
    for key, c in f.terms.items():
        parts.setdefault(len(key[1]) & 1, {})[key] = c
    return {p: SuperExpr(t) for p, t in parts.items()}


def lie_bracket(x: LieValuedExpr, y: LieValuedExpr) -> LieValuedExpr:
    if x.algebra != y.algebra:
        raise LieError("operands belong to different presentations")
    alg = x.algebra
    out: dict[str, SuperExpr] = {}
    for a, f in x.terms.items():
        pa = alg.parity(a)
        for b, g in y.terms.items():
            rhs = alg.bracket(a, b)
            if not rhs:
                continue
            for pg, g_part in _split_parity(g).items():
                fg = mul(f, g_part)
                if pa & pg:
                    fg = -fg
                for d, c in rhs.items():
                    out[d] = out.get(d, SuperExpr()) + fg.scale(c)
    return LieValuedExpr(alg, out)


def exterior_derivative_lie(x: LieValuedExpr, chart: Chart) -> LieValuedForm:
    return x.map_coefficients(lambda f: exterior_derivative(f, chart), LieValuedForm)


@dataclass(frozen=True)
class MaurerCartan:
    i_omega: LieValuedForm
    terms: tuple[LieValuedForm, ...]  # the nonzero series terms, order 0 upwards

    @property
    def omega(self) -> LieValuedForm:
        return self.i_omega.scale(SuperExpr.const(-I))

    @property
    def order(self) -> int:
        """Index of the first vanishing term of the series."""
        return len(self.terms)


def maurer_cartan(X: LieValuedExpr, chart: Chart, order_cap: int = 16) -> MaurerCartan:
    """i*Omega = exp(-X) d exp(X) via the terminating Hadamard series."""
    for s, f in X.terms.items():
        for pf in _split_parity(f):
            if (pf + X.algebra.parity(s)) % 2:
                raise LieError("exponent must be even")
    term: LieValuedExpr = exterior_derivative_lie(X, chart)
    total = LieValuedForm(X.algebra)
    terms = []
    for n in range(order_cap + 1):
        if not term:
            return MaurerCartan(total, tuple(terms))
        scaled = term.map_coefficients(lambda f: f.scale(Fraction(1, factorial(n + 1))), LieValuedForm)
        terms.append(scaled)
        total = total + scaled
        term = -lie_bracket(X, term)
    raise LieError("series did not terminate by order cap")


def decompose_mc(omega: LieValuedExpr, stabilizer) -> tuple[LieValuedForm, LieValuedForm]:
    stabilizer = set(stabilizer)
    for s in stabilizer:
        omega.algebra.parity(s)
    stab = {s: f for s, f in omega.terms.items() if s in stabilizer}
    coset = {s: f for s, f in omega.terms.items() if s not in stabilizer}
    return LieValuedForm(omega.algebra, stab), LieValuedForm(omega.algebra, coset)


# --------------------------------------------------------------------------
# Built-in presentations
# --------------------------------------------------------------------------


def _coords(chart: Chart) -> dict[str, SuperExpr]:
    return {c.name: SuperExpr.gen(c) for c in chart.coordinates}


def _n2() -> LieAlgebraPresentation:
    x = _coords(R1N2)
    i = SuperExpr.const(I)
    return presentation(
        "n2",
        [("P", 0), ("Q", 1), ("Qb", 1)],
        {("Q", "Qb"): {"P": I * 2}},
        exponent={"P": i * x["t"], "Q": i * x["th"], "Qb": i * x["thb"]},
        stabilizer={"P"},
    )


def _n1() -> LieAlgebraPresentation:
    x = _coords(R1N1)
    i = SuperExpr.const(I)
    return presentation(
        "n1",
        [("P", 0), ("Q", 1)],
        {("Q", "Q"): {"P": I * 2}},
        exponent={"P": i * x["t"], "Q": i * x["th"]},
        stabilizer={"P"},
    )


N2 = _n2()
N1 = _n1()
BUILTIN_ALGEBRAS = {"n1": (N1, R1N1), "n2": (N2, R1N2)}


def exponent_of(pres: LieAlgebraPresentation) -> LieValuedExpr:
    if pres.exponent is None:
        raise LieError(f"presentation {pres.name} declares no exponent")
    return LieValuedExpr(pres, pres.exponent)


def flatness_residual(mc: MaurerCartan, chart: Chart) -> LieValuedForm:
    """d W + 1/2 [W, W] for W = i*Omega; vanishes identically for a Maurer-Cartan form."""
    W = mc.i_omega
    half = lie_bracket(W, W).map_coefficients(lambda f: f.scale(Fraction(1, 2)))
    return LieValuedForm(W.algebra, (exterior_derivative_lie(W, chart) + half).terms)
