"""Seeded random superexpressions, vector fields and superfields.

Everything here draws from an explicit :class:`random.Random` so that the
property suites and the verification report are reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .calculus import EPS, EPSB, Chart, CoordinateMap, VectorField
from .components import Supermultiplet121, expand_superfield
from .kernel import Coefficient, Generator, Neg, Parity, Power, Product, Sum, SuperExpr, function, monomial, odd_constant, parameter

EXTRA_EVEN = (parameter("lam"), function("q", 0), function("q", 0, 1))
EXTRA_ODD = (EPS, EPSB, function("psi", 1))


@dataclass(frozen=True)
class SampleConfig:
    max_terms: int = 3
    max_factors: int = 3
    max_exponent: int = 2
    coefficient_range: int = 3
    differentials: bool = False
    extras: bool = True


def random_coefficient(rng: random.Random, bound: int = 3) -> Coefficient:
    while True:
        re = Fraction(rng.randint(-bound, bound), rng.randint(1, 2))
        im = Fraction(rng.randint(-bound, bound), rng.randint(1, 2)) if rng.random() < 0.4 else 0
        c = Coefficient(re, im)
        if c:
            return c


def _pool(chart: Chart, cfg: SampleConfig) -> list[Generator]:
    pool = list(chart.coordinates)
    if cfg.differentials:
        pool += chart.differentials
    if cfg.extras:
        pool += EXTRA_EVEN + EXTRA_ODD
    return pool


def random_monomial(rng: random.Random, chart: Chart, cfg: SampleConfig = SampleConfig()) -> SuperExpr:
    pool = _pool(chart, cfg)
    factors = []
    for _ in range(rng.randint(0, cfg.max_factors)):
        g = rng.choice(pool)
        factors.extend([g] * (1 if g.is_odd else rng.randint(1, cfg.max_exponent)))
    return monomial(random_coefficient(rng, cfg.coefficient_range), factors)


def random_expr(rng: random.Random, chart: Chart, parity: Parity | None = None, cfg: SampleConfig = SampleConfig()) -> SuperExpr:
    """A sum of up to ``max_terms`` random monomials, homogeneous if ``parity`` is given."""
    out = SuperExpr()
    for _ in range(rng.randint(1, cfg.max_terms)):
        for _attempt in range(20):
            m = random_monomial(rng, chart, cfg)
            if m and (parity is None or m.parity == parity):
                out = out + m
                break
    return out


def random_form(rng: random.Random, chart: Chart, parity: Parity | None = None, cfg: SampleConfig = SampleConfig()) -> SuperExpr:
    return random_expr(rng, chart, parity, SampleConfig(**{**cfg.__dict__, "differentials": True}))


def random_vector_field(rng: random.Random, chart: Chart, parity: Parity, cfg: SampleConfig = SampleConfig()) -> VectorField:
    comps = {}
    for c in chart.coordinates:
        if rng.random() < 0.75:
            comps[c] = random_expr(rng, chart, Parity((parity + c.parity) % 2), cfg)
    return VectorField(chart, comps)


def random_map(rng: random.Random, chart: Chart, cfg: SampleConfig = SampleConfig(max_terms=2, max_factors=2)) -> CoordinateMap:
    """Identity plus a random perturbation; perturbations of t are nilpotent
    so function-of-t symbols stay expandable."""
    images = {}
    for c in chart.coordinates:
        shift = random_expr(rng, chart, c.parity, cfg) if rng.random() < 0.8 else SuperExpr()
        if c.name == "t":
            shift = shift * SuperExpr.gen(rng.choice(chart.odd_coordinates)) * SuperExpr.gen(EPS) if shift else shift
        images[c] = SuperExpr.gen(c) + shift
    return CoordinateMap(chart, images)


def _poly(rng: random.Random, coefficients, t: Generator) -> SuperExpr:
    out = SuperExpr()
    T = SuperExpr.gen(t)
    for k, c in enumerate(coefficients):
        out = out + c * T**k
    return out


def random_polynomial_multiplet(rng: random.Random, chart: Chart, degree: int = 3) -> Supermultiplet121:
    """(a, chi, chib, c) with polynomial time dependence; the odd components
    carry odd constants eta_k as coefficients."""
    t = chart.coordinate("t")
    etas = [SuperExpr.gen(odd_constant(f"eta{k}")) for k in range(4)]

    def even():
        return _poly(rng, [SuperExpr.const(random_coefficient(rng)) for _ in range(rng.randint(1, degree + 1))], t)

    def odd():
        return _poly(rng, [SuperExpr.const(random_coefficient(rng)) * rng.choice(etas) for _ in range(rng.randint(1, degree + 1))], t)

    return Supermultiplet121(even(), odd(), odd(), even())


def random_superfield(rng: random.Random, chart: Chart, degree: int = 3) -> SuperExpr:
    return expand_superfield(random_polynomial_multiplet(rng, chart, degree), chart)


def random_term_tree(rng: random.Random, chart: Chart, depth: int = 3, cfg: SampleConfig = SampleConfig()):
    """An uncanonicalized Sum/Product/Neg/Power tree over the sample pool."""
    pool = _pool(chart, cfg)
    if depth == 0 or (depth < 3 and rng.random() < 0.25):
        return rng.choice(pool) if rng.random() < 0.8 else random_coefficient(rng, cfg.coefficient_range)
    kind = rng.randrange(4)
    if kind == 0:
        return Sum(tuple(random_term_tree(rng, chart, depth - 1, cfg) for _ in range(rng.randint(1, 3))))
    if kind == 1:
        return Product(tuple(random_term_tree(rng, chart, depth - 1, cfg) for _ in range(rng.randint(1, 3))))
    if kind == 2:
        return Neg(random_term_tree(rng, chart, depth - 1, cfg))
    return Power(random_term_tree(rng, chart, depth - 1, cfg), rng.randint(0, 2))
