"""Contact-geometric queries for odd one-forms on a chart.

Kernel distributions, nondegeneracy, Reeb fields, contact Hamiltonian vector
fields and the strict/contact classification of vector fields.  Anything
defined by linear conditions (Reeb, Hamiltonian, multipliers) is found with
an exact solve over an ansatz in the chart's odd-monomial basis, which also
certifies uniqueness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .calculus import (
    R1N1,
    R1N2,
    Chart,
    VectorField,
    apply_vf,
    exterior_derivative,
    interior_product,
    lie_derivative,
    susy_generators,
)
from .components import multiplet_of
from .kernel import (
    CONST,
    DIFF,
    PARAM,
    I,
    Generator,
    KernelError,
    Parity,
    SuperExpr,
    body,
    invert,
    key_expr,
    left_partial,
    mul,
    parity_of,
    split_left,
    substitute,
)
from .linear import NoSolution, SolveError, solve_linear


class ContactError(ValueError):
    pass


class HamiltonianError(ContactError):
    pass


@dataclass(frozen=True)
class OneForm:
    chart: Chart
    expr: SuperExpr

    def __post_init__(self):
        diffs = set(self.chart.differentials)
        for (evens, odds) in self.expr.terms:
            degree = sum(k for g, k in evens if g in diffs) + sum(1 for g in odds if g in diffs)
            if degree != 1:
                raise ContactError("not a one-form: every term needs exactly one differential")

    def coefficient(self, c: Generator | str) -> SuperExpr:
        if isinstance(c, str):
            c = self.chart.coordinate(c)
        return left_partial(self.chart.differential_of(c), self.expr)

    @property
    def coefficients(self) -> dict[Generator, SuperExpr]:
        return {c: self.coefficient(c) for c in self.chart.coordinates}

    @property
    def d(self) -> SuperExpr:
        return exterior_derivative(self.expr, self.chart)

    def scale(self, f) -> "OneForm":
        return OneForm(self.chart, mul(SuperExpr.lift(f), self.expr))

    def __str__(self):
        return str(self.expr)


def standard_form(chart: Chart) -> OneForm:
    """dt + i(th dthb + thb dth) on r1n2, dt + i th dth on r1n1."""
    i = SuperExpr.const(I)
    g = {c.name: SuperExpr.gen(c) for c in chart.coordinates + chart.differentials}
    if chart == R1N2:
        return OneForm(chart, g["dt"] + i * (g["th"] * g["dthb"] + g["thb"] * g["dth"]))
    if chart == R1N1:
        return OneForm(chart, g["dt"] + i * g["th"] * g["dth"])
    raise ContactError(f"no standard contact form on chart {chart.name!r}")


@dataclass(frozen=True)
class Distribution:
    basis: tuple[VectorField, ...]
    corank: tuple[int, int]


@dataclass(frozen=True)
class ContactClassification:
    kind: str  # strict | contact | none
    multiplier: SuperExpr | None = None
    body_status: str | None = None  # nonzero-constant | assumed-nonvanishing | vanishing


# --------------------------------------------------------------------------
# Simple queries
# --------------------------------------------------------------------------


def is_nonvanishing(alpha: OneForm) -> bool:
    return any(body(coeff) for coeff in alpha.coefficients.values())


def _time(chart: Chart) -> Generator:
    if chart.time is None:
        raise ContactError("chart has no time coordinate t")
    return chart.time


def kernel_basis(alpha: OneForm) -> Distribution:
    chart = alpha.chart
    t = _time(chart)
    try:
        inv = invert(alpha.coefficient(t))
    except KernelError:
        raise ContactError("dt-coefficient not invertible") from None
    basis = []
    for c in chart.coordinates:
        if c == t:
            continue
        V = VectorField(chart, {c: SuperExpr.const(1), t: -mul(alpha.coefficient(c), inv)})
        if interior_product(V, alpha.expr):
            raise ContactError(f"kernel vector for {c.name} does not annihilate the form")
        basis.append(V)
    corank = (1, 0) if not t.is_odd else (0, 1)
    return Distribution(tuple(basis), corank)


def pairing_matrix(alpha: OneForm, dist: Distribution) -> list[list[SuperExpr]]:
    omega = alpha.d
    rows = []
    for Xj in dist.basis:
        rows.append([interior_product(Xj, interior_product(Xk, omega)) for Xk in dist.basis])
    return rows


def _permutation_sign(perm) -> int:
    sign, seen = 1, list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def determinant(matrix: list[list[SuperExpr]]) -> SuperExpr:
    """Leibniz expansion; entries must be even so their order is irrelevant."""
    n = len(matrix)
    total = SuperExpr()
    for perm in permutations(range(n)):
        term = SuperExpr.const(_permutation_sign(perm))
        for row, col in enumerate(perm):
            term = mul(term, matrix[row][col])
            if not term:
                break
        total = total + term
    return total


def nondegenerate_on(alpha: OneForm, dist: Distribution) -> bool:
    m = pairing_matrix(alpha, dist)
    for row in m:
        for entry in row:
            if entry and parity_of(entry) != Parity.EVEN:
                raise ContactError("pairing matrix not even")
    return bool(body(determinant(m)))


def is_contact(alpha: OneForm) -> bool:
    if not is_nonvanishing(alpha):
        return False
    try:
        dist = kernel_basis(alpha)
    except ContactError:
        return False
    return nondegenerate_on(alpha, dist)


# --------------------------------------------------------------------------
# Ansatz solving
# --------------------------------------------------------------------------


def _unknown(name: str, parity: int) -> Generator:
    # '?' never appears in parsed input, so unknowns cannot clash with user symbols
    return Generator(name, CONST if parity else PARAM, Parity(parity))


def vector_field_ansatz(chart: Chart, parity: Parity, tag: str = "u"):
    """A general vector field of the given parity with one unknown per
    (coordinate, odd monomial) slot.  Returns (field, unknowns)."""
    unknowns, comps = [], {}
    for c in chart.coordinates:
        comp = SuperExpr()
        for mono in chart.odd_basis():
            u = _unknown(f"?{tag}{len(unknowns)}", (parity + c.parity + len(mono)) % 2)
            unknowns.append(u)
            comp = comp + mul(key_expr(((), mono)), SuperExpr.gen(u))
        comps[c] = comp
    return VectorField(chart, comps), unknowns


def function_ansatz(chart: Chart, parities, tag: str = "f"):
    unknowns, f = [], SuperExpr()
    for p in parities:
        for mono in chart.odd_basis():
            u = _unknown(f"?{tag}{len(unknowns)}", (p + len(mono)) % 2)
            unknowns.append(u)
            f = f + mul(key_expr(((), mono)), SuperExpr.gen(u))
    return f, unknowns


def scalar_equations(chart: Chart, exprs) -> list[SuperExpr]:
    """Split each expression along monomials in odd coordinates and differentials."""
    selected = set(chart.odd_coordinates) | set(chart.differentials)
    out = []
    for e in exprs:
        out.extend(split_left(e, lambda g: g in selected).values())
    return out


def _solve_field(chart, ansatz, unknowns, conditions) -> VectorField:
    solution = solve_linear(scalar_equations(chart, conditions), unknowns)
    return VectorField(chart, {c: substitute(comp, solution) for c, comp in ansatz.items()})


def reeb(alpha: OneForm) -> VectorField:
    """The even P with i_P alpha = 1 and i_P d(alpha) = 0, certified unique."""
    chart = alpha.chart
    X, unknowns = vector_field_ansatz(chart, Parity.EVEN, "r")
    omega = alpha.d
    conditions = [interior_product(X, alpha.expr) - 1, interior_product(X, omega)]
    try:
        P = _solve_field(chart, X, unknowns, conditions)
    except NoSolution:
        raise ContactError("no solution") from None
    except SolveError as exc:
        raise ContactError(str(exc)) from None
    assert interior_product(P, alpha.expr) == 1 and not interior_product(P, omega)
    return P


def hamiltonian_vf(alpha: OneForm, upsilon: SuperExpr) -> VectorField:
    """The even X with i_X alpha = U and i_X d(alpha) = P(U) alpha - dU."""
    upsilon = SuperExpr.lift(upsilon)
    if parity_of(upsilon) != Parity.EVEN:
        raise HamiltonianError("odd superfield rejected: only even superfields generate contact Hamiltonian vector fields")
    chart = alpha.chart
    P = reeb(alpha)
    rhs = mul(apply_vf(P, upsilon), alpha.expr) - exterior_derivative(upsilon, chart)
    X, unknowns = vector_field_ansatz(chart, Parity.EVEN, "h")
    conditions = [interior_product(X, alpha.expr) - upsilon, interior_product(X, alpha.d) - rhs]
    try:
        return _solve_field(chart, X, unknowns, conditions)
    except NoSolution:
        raise HamiltonianError("no solution") from None
    except SolveError as exc:
        raise HamiltonianError(str(exc)) from None


def hamiltonian_vf_closed_form(upsilon: SuperExpr) -> VectorField:
    """X_U = (a + i/2 (th chi + chib thb)) d_t + i/2 (Db U) d_th + i/2 (D U) d_thb."""
    upsilon = SuperExpr.lift(upsilon)
    if parity_of(upsilon) != Parity.EVEN or any(g.kind == DIFF for g in upsilon.generators()):
        raise HamiltonianError("not in component form")
    chart = R1N2
    m = multiplet_of(upsilon, chart)
    a, chi, chib = m.q, m.psi, m.psib
    th, thb = SuperExpr.gen(chart.coordinate("th")), SuperExpr.gen(chart.coordinate("thb"))
    half_i = SuperExpr.const(I * Fraction(1, 2))
    gens = susy_generators(chart)
    return VectorField(
        chart,
        {
            "t": a + half_i * (th * chi + chib * thb),
            "th": half_i * apply_vf(gens["Db"], upsilon),
            "thb": half_i * apply_vf(gens["D"], upsilon),
        },
    )


def classify_contact_vf(X: VectorField, alpha: OneForm) -> ContactClassification:
    lx = lie_derivative(X, alpha.expr)
    if not lx:
        return ContactClassification("strict", SuperExpr(), None)
    chart = alpha.chart
    parity = X.parity
    parities = [parity] if parity is not None else [Parity.EVEN, Parity.ODD]
    f, unknowns = function_ansatz(chart, parities)
    try:
        solution = solve_linear(scalar_equations(chart, [lx - mul(f, alpha.expr)]), unknowns)
    except SolveError:
        return ContactClassification("none")
    mult = substitute(f, solution)
    b = body(mult)
    if not b:
        status = "vanishing"
    elif b.is_constant():
        status = "nonzero-constant"
    else:
        status = "assumed-nonvanishing"
    return ContactClassification("contact", mult, status)


def infinitesimal_transformations(X: VectorField) -> dict[str, SuperExpr]:
    """delta c = X[c] for every coordinate."""
    return {c.name: comp for c, comp in X.items()}
