"""Superfields in components and the induced component transformations."""

from __future__ import annotations

from dataclasses import dataclass

from .calculus import R1N2, Chart, VectorField, apply_vf
from .kernel import (
    DIFF,
    FUNC,
    I,
    Generator,
    Parity,
    SuperExpr,
    left_partial,
    monomial,
    mul,
    parity_of,
    split_left,
    time_derivative,
)


class ComponentError(ValueError):
    pass


@dataclass(frozen=True)
class Supermultiplet121:
    """Components of Phi = q + i th psi + i psib thb + i th thb b."""

    q: SuperExpr
    psi: SuperExpr
    psib: SuperExpr
    b: SuperExpr

    @classmethod
    def generic(cls, names=("q", "psi", "psib", "b")) -> "Supermultiplet121":
        q, psi, psib, b = names
        return cls(
            SuperExpr.gen(Generator(q, FUNC, Parity.EVEN)),
            SuperExpr.gen(Generator(psi, FUNC, Parity.ODD)),
            SuperExpr.gen(Generator(psib, FUNC, Parity.ODD)),
            SuperExpr.gen(Generator(b, FUNC, Parity.EVEN)),
        )

    def as_dict(self) -> dict[str, SuperExpr]:
        return {"q": self.q, "psi": self.psi, "psib": self.psib, "b": self.b}

    def __iter__(self):
        return iter((self.q, self.psi, self.psib, self.b))


def _odd_coords(chart: Chart):
    return chart.coordinate("th"), chart.coordinate("thb")


def expand_superfield(m: Supermultiplet121, chart: Chart = R1N2) -> SuperExpr:
    th, thb = (SuperExpr.gen(g) for g in _odd_coords(chart))
    i = SuperExpr.const(I)
    return m.q + i * th * m.psi + i * m.psib * thb + i * th * thb * m.b


def collect_components(phi: SuperExpr, chart: Chart = R1N2) -> dict[tuple[str, ...], SuperExpr]:
    """Coefficients of the odd-coordinate monomials, basis on the left.

    Keys are tuples of coordinate names: (), ("th",), ("thb",), ("th", "thb").
    """
    if any(g.kind == DIFF for g in phi.generators()):
        raise ComponentError("contains differentials")
    odd = set(chart.odd_coordinates)
    parts = split_left(phi, lambda g: g in odd)
    out = {}
    for combo in chart.odd_basis():
        key = ((), combo)
        out[tuple(g.name for g in combo)] = parts.get(key, SuperExpr())
    return out


def multiplet_of(phi: SuperExpr, chart: Chart = R1N2) -> Supermultiplet121:
    """Inverse of :func:`expand_superfield`, stripping the i factors."""
    comps = collect_components(phi, chart)
    i = SuperExpr.const(I)
    # th X = i th psi      -> psi  = -i X
    # thb Y = i psib thb = -i thb psib -> psib = i Y
    # th thb Z = i th thb b -> b  = -i Z
    return Supermultiplet121(
        comps[()],
        -i * comps[("th",)],
        i * comps[("thb",)],
        -i * comps[("th", "thb")],
    )


def delta_components(X: VectorField, m: Supermultiplet121) -> Supermultiplet121:
    """Component variations (dq, dpsi, dpsib, db) induced by X[Phi]."""
    phi = expand_superfield(m, X.chart)
    delta = multiplet_of(apply_vf(X, phi), X.chart)
    expected = (Parity.EVEN, Parity.ODD, Parity.ODD, Parity.EVEN)
    for value, parity in zip(delta, expected):
        if value and parity_of(value) != parity:
            raise ComponentError("variation not expressible in multiplet shape")
    return delta


def vary(expr: SuperExpr, m: Supermultiplet121, delta: Supermultiplet121) -> SuperExpr:
    """Apply the even derivation f^(k) -> (delta f)^(k) on component symbols.

    ``m`` must be the generic multiplet (one generator per slot).
    """
    rules: dict[Generator, SuperExpr] = {}
    for slot, change in zip(m, delta):
        (gen,) = slot.generators()
        rules[gen] = change
    out = SuperExpr()
    for g in expr.generators():
        if g.kind != FUNC:
            continue
        base = Generator(g.name, FUNC, g.parity)
        if base not in rules:
            continue
        change = rules[base]
        for _ in range(g.order):
            change = time_derivative(change)
        out = out + mul(change, left_partial(g, expr))
    return out


def component_basis_expr(names: tuple[str, ...], chart: Chart = R1N2) -> SuperExpr:
    if not names:
        return SuperExpr.const(1)
    return monomial(1, [chart.coordinate(n) for n in names])


__all__ = [
    "ComponentError",
    "Supermultiplet121",
    "collect_components",
    "component_basis_expr",
    "delta_components",
    "expand_superfield",
    "multiplet_of",
    "vary",
]
