"""Vector fields and Cartan calculus on the antitangent bundle of a chart."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import factorial
from typing import Mapping

from .kernel import I as _I
from .kernel import (
    FUNC,
    Generator,
    KernelError,
    Parity,
    SuperExpr,
    body,
    coordinate,
    differential,
    left_partial,
    mul,
    odd_constant,
    parity_of,
    substitute,
    time_derivative,
)


class CalculusError(ValueError):
    pass


@dataclass(frozen=True)
class Chart:
    name: str
    coordinates: tuple[Generator, ...]

    def __post_init__(self):
        names = [c.name for c in self.coordinates]
        if len(set(names)) != len(names):
            raise CalculusError(f"duplicate coordinate in chart {self.name}")

    @cached_property
    def differentials(self) -> tuple[Generator, ...]:
        return tuple(differential(c) for c in self.coordinates)

    @cached_property
    def time(self) -> Generator | None:
        for c in self.coordinates:
            if c.name == "t" and not c.is_odd:
                return c
        return None

    @cached_property
    def odd_coordinates(self) -> tuple[Generator, ...]:
        return tuple(sorted((c for c in self.coordinates if c.is_odd), key=lambda g: g.key))

    def coordinate(self, name: str) -> Generator:
        for c in self.coordinates:
            if c.name == name:
                return c
        raise CalculusError(f"no coordinate {name!r} in chart {self.name}")

    def differential_of(self, c: Generator) -> Generator:
        return self.differentials[self.coordinates.index(c)]

    def odd_basis(self) -> list[tuple[Generator, ...]]:
        """All products of odd coordinates: (), (th,), (thb,), (th, thb), ..."""
        odd = self.odd_coordinates
        return [combo for n in range(len(odd) + 1) for combo in combinations(odd, n)]

    def partial(self, c: Generator, e: SuperExpr) -> SuperExpr:
        """Coordinate derivative; along t it is the total time derivative."""
        if c == self.time:
            return time_derivative(e)
        return left_partial(c, e)

    def is_chart_generator(self, g: Generator) -> bool:
        return g in self.coordinates or g in self.differentials


def chart_from_declaration(name: str, even: list[str], odd: list[str]) -> Chart:
    coords = [coordinate(n, 0) for n in even] + [coordinate(n, 1) for n in odd]
    return Chart(name, tuple(coords))


R1N1 = chart_from_declaration("r1n1", ["t"], ["th"])
R1N2 = chart_from_declaration("r1n2", ["t"], ["th", "thb"])
BUILTIN_CHARTS = {"r1n1": R1N1, "r1n2": R1N2}

EPS = odd_constant("eps")
EPSB = odd_constant("epsb")


def builtin_chart(name: str) -> Chart:
    try:
        return BUILTIN_CHARTS[name]
    except KeyError:
        raise CalculusError(f"unknown chart {name!r}") from None


# --------------------------------------------------------------------------
# Vector fields
# --------------------------------------------------------------------------


class VectorField:
    """``sum_c X_c d/dc`` with each component multiplying from the left."""

    __slots__ = ("chart", "components")

    def __init__(self, chart: Chart, components: Mapping[Generator | str, SuperExpr] | None = None):
        comps = [SuperExpr() for _ in chart.coordinates]
        for c, value in (components or {}).items():
            if isinstance(c, str):
                c = chart.coordinate(c)
            comps[chart.coordinates.index(c)] = SuperExpr.lift(value)
        self.chart = chart
        self.components: tuple[SuperExpr, ...] = tuple(comps)

    @classmethod
    def basis(cls, chart: Chart, name: str) -> "VectorField":
        return cls(chart, {name: SuperExpr.const(1)})

    def __getitem__(self, c: Generator | str) -> SuperExpr:
        if isinstance(c, str):
            c = self.chart.coordinate(c)
        return self.components[self.chart.coordinates.index(c)]

    def items(self):
        return zip(self.chart.coordinates, self.components)

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.chart == other.chart and self.components == other.components

    def __hash__(self):
        return hash((self.chart.name, self.components))

    def __bool__(self):
        return any(self.components)

    def _check(self, other):
        if not isinstance(other, VectorField):
            return False
        if other.chart != self.chart:
            raise CalculusError("vector fields live on different charts")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return VectorField(self.chart, {c: a + b for c, a, b in zip(self.chart.coordinates, self.components, other.components)})

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return VectorField(self.chart, {c: a - b for c, a, b in zip(self.chart.coordinates, self.components, other.components)})

    def __neg__(self):
        return VectorField(self.chart, {c: -a for c, a in self.items()})

    def __rmul__(self, scalar):
        # scalar * X multiplies every component from the left
        s = SuperExpr.lift(scalar)
        return VectorField(self.chart, {c: mul(s, a) for c, a in self.items()})

    @property
    def parity(self) -> Parity | None:
        seen = set()
        for c, comp in self.items():
            p = parity_of(comp)
            if p is None:
                return None
            if comp:
                seen.add(p + c.parity)
        if len(seen) > 1:
            return None
        return seen.pop() if seen else Parity.EVEN

    def split(self) -> dict[Parity, "VectorField"]:
        """Even and odd homogeneous parts."""
        parts = {Parity.EVEN: {}, Parity.ODD: {}}
        for c, comp in self.items():
            for key, coeff in comp.terms.items():
                p = Parity((len(key[1]) + c.parity) % 2)
                parts[p].setdefault(c, {})[key] = coeff
        return {p: VectorField(self.chart, {c: SuperExpr(t) for c, t in d.items()}) for p, d in parts.items()}

    def __call__(self, f: SuperExpr) -> SuperExpr:
        return apply_vf(self, f)

    def __str__(self):
        from .syntax import print_vector_field

        return print_vector_field(self)

    def __repr__(self):
        return f"VectorField({self})"


def apply_vf(X: VectorField, f: SuperExpr) -> SuperExpr:
    f = SuperExpr.lift(f)
    out = SuperExpr()
    for c, comp in X.items():
        if comp:
            out = out + mul(comp, X.chart.partial(c, f))
    return out


def _homogeneous_parity(X: VectorField) -> Parity:
    p = X.parity
    if p is None:
        raise CalculusError("inhomogeneous argument")
    return p


def graded_commutator(X: VectorField, Y: VectorField) -> VectorField:
    px, py = _homogeneous_parity(X), _homogeneous_parity(Y)
    sign = -1 if (px & py) else 1
    comps = {}
    for c, _ in X.items():
        xc, yc = X[c], Y[c]
        comps[c] = apply_vf(X, yc) - apply_vf(Y, xc).scale(sign)
    return VectorField(X.chart, comps)


# --------------------------------------------------------------------------
# Cartan calculus
# --------------------------------------------------------------------------


def exterior_derivative(form: SuperExpr, chart: Chart) -> SuperExpr:
    """d = sum_c dc * d/dc, an odd derivation with the differential on the left."""
    form = SuperExpr.lift(form)
    out = SuperExpr()
    for c, dc in zip(chart.coordinates, chart.differentials):
        part = chart.partial(c, form)
        if part:
            out = out + mul(SuperExpr.gen(dc), part)
    return out


def interior_product(X: VectorField, form: SuperExpr) -> SuperExpr:
    """i_X = (-1)^|X| sum_c X_c d/d(dc); inhomogeneous X acts by linearity."""
    form = SuperExpr.lift(form)
    out = SuperExpr()
    for p, part in X.split().items():
        if not part:
            continue
        acc = SuperExpr()
        for (c, comp), dc in zip(part.items(), part.chart.differentials):
            if comp:
                acc = acc + mul(comp, left_partial(dc, form))
        out = out + (-acc if p else acc)
    return out


def lie_derivative(X: VectorField, form: SuperExpr) -> SuperExpr:
    """L_X = [d, i_X] = d i_X + (-1)^|X| i_X d."""
    form = SuperExpr.lift(form)
    chart = X.chart
    d_form = exterior_derivative(form, chart)
    out = SuperExpr()
    for p, part in X.split().items():
        if not part:
            continue
        term = exterior_derivative(interior_product(part, form), chart)
        inner = interior_product(part, d_form)
        out = out + term + (-inner if p else inner)
    return out


# --------------------------------------------------------------------------
# Coordinate maps
# --------------------------------------------------------------------------


class CoordinateMap:
    """A change of coordinates given by the images of the chart coordinates.

    Differential images are never stored; they are derived as ``d(image)``,
    which is the bundle-automorphism law.
    """

    __slots__ = ("chart", "images")

    def __init__(self, chart: Chart, images: Mapping[Generator | str, SuperExpr] | None = None):
        imgs = {c: SuperExpr.gen(c) for c in chart.coordinates}
        for c, img in (images or {}).items():
            if isinstance(c, str):
                c = chart.coordinate(c)
            if c not in imgs:
                raise CalculusError(f"{c} is not a coordinate of {chart.name}")
            img = SuperExpr.lift(img)
            p = parity_of(img)
            if p is None or (img and p != c.parity):
                raise KernelError(f"parity mismatch in substitution for {c}")
            imgs[c] = img
        self.chart = chart
        self.images: dict[Generator, SuperExpr] = imgs

    @classmethod
    def identity(cls, chart: Chart) -> "CoordinateMap":
        return cls(chart)

    def __getitem__(self, c):
        if isinstance(c, str):
            c = self.chart.coordinate(c)
        return self.images[c]

    def differential_image(self, c: Generator | str) -> SuperExpr:
        return exterior_derivative(self[c], self.chart)

    def compose(self, inner: "CoordinateMap") -> "CoordinateMap":
        """``self o inner``, so that pullback(self o inner) = inner^* self^*."""
        return CoordinateMap(self.chart, {c: pullback(inner, img) for c, img in self.images.items()})

    def __eq__(self, other):
        return isinstance(other, CoordinateMap) and self.chart == other.chart and self.images == other.images


def _function_images(phi: CoordinateMap, form: SuperExpr) -> dict[Generator, SuperExpr]:
    """Taylor-expand f(t') for every function symbol when t' - t is nilpotent."""
    t = phi.chart.time
    funcs = {g for g in form.generators() if g.kind == FUNC}
    if t is None or not funcs:
        return {}
    shift = phi.images[t] - SuperExpr.gen(t)
    if not shift:
        return {}
    if body(shift):
        raise CalculusError("function symbols cannot follow a non-nilpotent change of t")
    powers = [SuperExpr.const(1)]
    while True:
        nxt = mul(powers[-1], shift)
        if not nxt:
            break
        powers.append(nxt)
    out = {}
    for f in funcs:
        acc = SuperExpr()
        g = f
        for k, pw in enumerate(powers):
            acc = acc + mul(SuperExpr.gen(g), pw).scale(_inv_factorial(k))
            g = g.derivative()
        out[f] = acc
    return out


def _inv_factorial(k: int) -> Fraction:
    return Fraction(1, factorial(k))


def pullback(phi: CoordinateMap, form: SuperExpr) -> SuperExpr:
    form = SuperExpr.lift(form)
    chart = phi.chart
    mapping: dict[Generator, SuperExpr] = {}
    present = form.generators()
    for c, dc in zip(chart.coordinates, chart.differentials):
        if c in present:
            mapping[c] = phi.images[c]
        if dc in present:
            mapping[dc] = exterior_derivative(phi.images[c], chart)
    mapping.update(_function_images(phi, form))
    return substitute(form, mapping)


# --------------------------------------------------------------------------
# Built-in fields and maps
# --------------------------------------------------------------------------


def _vf(chart: Chart, **comps) -> VectorField:
    return VectorField(chart, comps)


def susy_generators(chart: Chart) -> dict[str, VectorField]:
    """Q, Qb, P, R, D, Db on r1n2; Q, P, D on r1n1."""
    i = SuperExpr.const(_I)
    if chart == R1N2:
        th, thb = SuperExpr.gen(chart.coordinate("th")), SuperExpr.gen(chart.coordinate("thb"))
        one = SuperExpr.const(1)
        return {
            "Q": _vf(chart, th=one, t=i * thb),
            "Qb": _vf(chart, thb=one, t=i * th),
            "P": _vf(chart, t=one),
            "R": _vf(chart, th=-i * th, thb=i * thb),
            "D": _vf(chart, th=one, t=-i * thb),
            "Db": _vf(chart, thb=one, t=-i * th),
        }
    if chart == R1N1:
        th = SuperExpr.gen(chart.coordinate("th"))
        one = SuperExpr.const(1)
        return {
            "Q": _vf(chart, th=one, t=i * th),
            "P": _vf(chart, t=one),
            "D": _vf(chart, th=one, t=-i * th),
        }
    raise CalculusError(f"unknown chart {chart.name!r}")


def susy_map(chart: Chart, eps: Generator = EPS, epsb: Generator = EPSB) -> CoordinateMap:
    """Finite supertranslation with odd parameters."""
    i = SuperExpr.const(_I)
    e, eb = SuperExpr.gen(eps), SuperExpr.gen(epsb)
    t = SuperExpr.gen(chart.coordinate("t"))
    th = SuperExpr.gen(chart.coordinate("th"))
    if chart == R1N2:
        thb = SuperExpr.gen(chart.coordinate("thb"))
        return CoordinateMap(chart, {"t": t + i * (e * thb - th * eb), "th": th + e, "thb": thb + eb})
    if chart == R1N1:
        return CoordinateMap(chart, {"t": t + i * e * th, "th": th + e})
    raise CalculusError(f"unknown chart {chart.name!r}")


def r_map(chart: Chart, beta: SuperExpr) -> CoordinateMap:
    """R-rotation th -> (1 - i beta) th, thb -> (1 + i beta) thb for nilpotent even beta."""
    if chart != R1N2:
        raise CalculusError("R-symmetry is defined on r1n2")
    beta = SuperExpr.lift(beta)
    if parity_of(beta) != Parity.EVEN or body(beta):
        raise CalculusError("beta must be even and nilpotent")
    if mul(beta, beta):
        raise CalculusError("first-order truncation needs beta^2 = 0")
    i = SuperExpr.const(_I)
    th = SuperExpr.gen(chart.coordinate("th"))
    thb = SuperExpr.gen(chart.coordinate("thb"))
    return CoordinateMap(chart, {"th": (1 - i * beta) * th, "thb": (1 + i * beta) * thb})

