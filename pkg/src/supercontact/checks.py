"""The fixed list of identity checks behind ``supercontact verify paper``.

Each check has a frozen id, a short anchor naming the structure it concerns,
and produces a pass/fail status with the computed expression text as detail.
Checks never raise: any error is recorded as a failure of that check.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Callable

from .calculus import (
    R1N1,
    R1N2,
    Chart,
    CoordinateMap,
    VectorField,
    apply_vf,
    exterior_derivative,
    graded_commutator,
    interior_product,
    lie_derivative,
    pullback,
    r_map,
    susy_generators,
    susy_map,
)
from .components import Supermultiplet121, delta_components, expand_superfield, multiplet_of, vary
from .contact import (
    HamiltonianError,
    OneForm,
    classify_contact_vf,
    hamiltonian_vf,
    hamiltonian_vf_closed_form,
    kernel_basis,
    nondegenerate_on,
    pairing_matrix,
    reeb,
    standard_form,
)
from .kernel import I, Parity, SuperExpr, body, odd_constant, substitute, time_derivative
from .lie import (
    N1,
    N2,
    LieAlgebraPresentation,
    decompose_mc,
    exterior_derivative_lie,
    exponent_of,
    flatness_residual,
    lie_bracket,
    maurer_cartan,
    presentation,
)
from .sampling import random_polynomial_multiplet
from .syntax import Context, parse_expr, parse_vf, print_canonical, print_vector_field


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 20100
    instances: int = 50
    order_cap: int = 16
    form: str | None = None


@dataclass(frozen=True)
class Check:
    id: str
    anchor: str
    description: str
    passed: bool
    detail: str

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def as_dict(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    @property
    def failed(self) -> list[str]:
        return [c.id for c in self.checks if not c.passed]

    def to_json(self) -> str:
        payload = {"status": "pass" if self.passed else "fail", "checks": [c.as_dict() for c in self.checks]}
        return json.dumps(payload, indent=2, sort_keys=True)

    def to_text(self) -> str:
        width = max(len(c.id) for c in self.checks)
        lines = [f"{c.status.upper():4}  {c.id:<{width}}  {c.detail}" for c in self.checks]
        n_fail = len(self.failed)
        lines.append(f"{len(self.checks) - n_fail}/{len(self.checks)} checks passed")
        return "\n".join(lines)


# --------------------------------------------------------------------------
# Shared fixtures
# --------------------------------------------------------------------------


@dataclass
class _Env:
    config: VerifyConfig
    alpha: OneForm
    ctx: Context = field(default_factory=lambda: Context(R1N2))
    ctx1: Context = field(default_factory=lambda: Context(R1N1))

    def __post_init__(self):
        self.ctx.declare_functions(["q", "b", "a", "c"], Parity.EVEN)
        self.ctx.declare_functions(["psi", "psib", "chi", "chib"], Parity.ODD)
        self.g = susy_generators(R1N2)
        self.g1 = susy_generators(R1N1)
        self._ham: dict[SuperExpr, VectorField] = {}
        self._upsilons: list[SuperExpr] | None = None

    def ham(self, upsilon: SuperExpr) -> VectorField:
        if upsilon not in self._ham:
            self._ham[upsilon] = hamiltonian_vf(self.alpha, upsilon)
        return self._ham[upsilon]

    @property
    def upsilons(self) -> list[SuperExpr]:
        """The generic superfield followed by the seeded polynomial instances."""
        if self._upsilons is None:
            rng = random.Random(self.config.seed)
            generic = self.e("a(t) + i*th*chi(t) + i*chib(t)*thb + i*th*thb*c(t)")
            self._upsilons = [generic] + [
                expand_superfield(random_polynomial_multiplet(rng, R1N2), R1N2) for _ in range(self.config.instances)
            ]
        return self._upsilons

    def e(self, text: str) -> SuperExpr:
        return parse_expr(text, self.ctx)

    def v(self, text: str) -> VectorField:
        return parse_vf(text, self.ctx)

    @property
    def susy(self) -> VectorField:
        return self.v("eps*@th + epsb*@thb + i*(eps*thb - th*epsb)*@t")


def _show(x) -> str:
    if isinstance(x, VectorField):
        return print_vector_field(x)
    if isinstance(x, SuperExpr):
        return print_canonical(x)
    if isinstance(x, (list, tuple)):
        return "{" + ", ".join(_show(y) for y in x) + "}"
    return str(x)


def _compare(pairs) -> tuple[bool, str]:
    """pairs: (label, computed, expected); detail lists computed values."""
    ok = all(got == want for _, got, want in pairs)
    parts = []
    for label, got, want in pairs:
        mark = "" if got == want else f" (expected {_show(want)})"
        parts.append(f"{label} = {_show(got)}{mark}")
    return ok, "; ".join(parts)


# --------------------------------------------------------------------------
# N=2
# --------------------------------------------------------------------------


def _bracket_qqb(env: _Env):
    g = env.g
    return _compare([("[Q,Qb]", graded_commutator(g["Q"], g["Qb"]), env.v("2*i*@t"))])


def _bracket_vanishing(env: _Env):
    g = env.g
    zero = VectorField(R1N2)
    return _compare(
        [(f"[{a},{b}]", graded_commutator(g[a], g[b]), zero) for a, b in (("Q", "Q"), ("Qb", "Qb"), ("Q", "P"), ("Qb", "P"))]
    )


def _dalpha(env: _Env):
    d = env.alpha.d
    return _compare([("d(alpha)", d, env.e("2*i*dth*dthb")), ("d(d(alpha))", exterior_derivative(d, R1N2), SuperExpr())])


def _kernel(env: _Env):
    dist = kernel_basis(env.alpha)
    pairs = [("kernel", list(dist.basis), [env.g["D"], env.g["Db"]])]
    pairs += [(f"i_X{k}(alpha)", interior_product(X, env.alpha.expr), SuperExpr()) for k, X in enumerate(dist.basis)]
    ok, _ = _compare(pairs)
    text = ", ".join(_show(X) for X in dist.basis)
    return ok and dist.corank == (1, 0), f"{{{text}}} corank {dist.corank}"


def _nondegenerate(env: _Env):
    a, g = env.alpha, env.g
    ok, detail = _compare(
        [
            ("i_D(d alpha)", interior_product(g["D"], a.d), env.e("-2*i*dthb")),
            ("i_Db(d alpha)", interior_product(g["Db"], a.d), env.e("-2*i*dth")),
        ]
    )
    dist = kernel_basis(a)
    nd = nondegenerate_on(a, dist)
    matrix = [[_show(x) for x in row] for row in pairing_matrix(a, dist)]
    return ok and nd, f"{detail}; pairing {matrix}; nondegenerate {nd}"


def _invariance(env: _Env):
    phi = susy_map(R1N2)
    return _compare(
        [
            ("dt'", phi.differential_image("t"), env.e("dt - i*epsb*dth - i*eps*dthb")),
            ("pullback(alpha) - alpha", pullback(phi, env.alpha.expr) - env.alpha.expr, SuperExpr()),
        ]
    )


def _infinitesimal(env: _Env):
    phi = susy_map(R1N2)
    X = env.susy
    return _compare(
        [(f"delta {c.name}", apply_vf(X, SuperExpr.gen(c)), phi[c] - SuperExpr.gen(c)) for c in R1N2.coordinates]
    )


def _strict(env: _Env):
    a = env.alpha.expr
    return _compare(
        [
            ("L_Q(alpha)", lie_derivative(env.g["Q"], a), SuperExpr()),
            ("L_Qb(alpha)", lie_derivative(env.g["Qb"], a), SuperExpr()),
            ("L_(eps Q + epsb Qb)(alpha)", lie_derivative(env.susy, a), SuperExpr()),
        ]
    )


def _reeb(env: _Env):
    a, g = env.alpha, env.g
    P = reeb(a)
    ok, detail = _compare(
        [
            ("P", P, env.v("@t")),
            ("i_P(alpha)", interior_product(P, a.expr), SuperExpr.const(1)),
            ("i_P(d alpha)", interior_product(P, a.d), SuperExpr()),
            ("[Q,Qb] - 2i P", graded_commutator(g["Q"], g["Qb"]) - (SuperExpr.const(I * 2) * P), VectorField(R1N2)),
        ]
    )
    kinds = {name: classify_contact_vf(X, a).kind for name, X in (("P", P), ("Q", g["Q"]), ("Qb", g["Qb"]))}
    return ok and set(kinds.values()) == {"strict"}, f"{detail}; {', '.join(f'{k} {v}' for k, v in kinds.items())}"


def _frobenius(env: _Env):
    D, Db = kernel_basis(env.alpha).basis
    Z = graded_commutator(D, Db)
    pairing = interior_product(Z, env.alpha.expr)
    ok, detail = _compare([("[D,Db]", Z, env.v("-2*i*@t"))])
    return ok and bool(pairing), f"{detail}; i_[D,Db](alpha) = {_show(pairing)}"


def _rsymmetry(env: _Env):
    g = env.g
    beta = env.e("eps*epsb")
    phi = r_map(R1N2, beta)
    zero = VectorField(R1N2)
    i = SuperExpr.const(I)
    return _compare(
        [
            ("pullback(alpha) - alpha", pullback(phi, env.alpha.expr) - env.alpha.expr, SuperExpr()),
            ("[R,Q]", graded_commutator(g["R"], g["Q"]), i * g["Q"]),
            ("[R,Qb]", graded_commutator(g["R"], g["Qb"]), -(i * g["Qb"])),
            ("[R,P]", graded_commutator(g["R"], g["P"]), zero),
            ("[R,R]", graded_commutator(g["R"], g["R"]), zero),
        ]
    )


def _ham_closed_form(env: _Env):
    ups = env.upsilons
    bad = [n for n, u in enumerate(ups) if env.ham(u) != hamiltonian_vf_closed_form(u)]
    generic = env.ham(ups[0])
    return not bad, f"{len(ups) - len(bad)}/{len(ups)} agree; generic X = {_show(generic)}"


def _ham_multiplier(env: _Env):
    ups = env.upsilons
    a = env.alpha.expr
    bad = []
    for n, u in enumerate(ups):
        X = env.ham(u)
        if lie_derivative(X, a) != time_derivative(u) * a:
            bad.append(n)
    return not bad, f"L_X(alpha) = dot(U) alpha on {len(ups) - len(bad)}/{len(ups)}"


def _ham_susy(env: _Env):
    X = hamiltonian_vf(env.alpha, env.e("2*(eps*thb - th*epsb)"))
    return _compare([("X_U", X, env.susy)])


def _ham_susy_normalized(env: _Env):
    U = interior_product(env.susy, env.alpha.expr)
    X = hamiltonian_vf(env.alpha, U)
    ok, detail = _compare([("U = i_(eps Q + epsb Qb)(alpha)", U, env.e("2*i*(eps*thb - th*epsb)")), ("X_U", X, env.susy)])
    return ok, detail


def _ham_unit(env: _Env):
    return _compare([("X_1", hamiltonian_vf(env.alpha, SuperExpr.const(1)), reeb(env.alpha))])


def _ham_odd(env: _Env):
    try:
        hamiltonian_vf(env.alpha, env.e("th"))
    except HamiltonianError as exc:
        return True, f"rejected: {exc}"
    return False, "odd superfield accepted"


SUPERCONFORMAL_DISPLAY = {
    "t": "lam*t + i*t*(eps*thb - th*epsb)",
    "th": "lam/2*th + eps*(t - i*th*thb)",
    "thb": "lam/2*thb + (t + i*th*thb)*epsb",
}


def superconformal_table(alpha: OneForm, ctx: Context) -> tuple[VectorField, list[tuple[str, SuperExpr, SuperExpr, str]]]:
    """Solver output for U = lam t + 2t(eps thb - th epsb) against the reference display.

    Returns the field and rows (coordinate, engine, display, verdict).
    """
    U = parse_expr("lam*t + 2*t*(eps*thb - th*epsb)", ctx)
    X = hamiltonian_vf(alpha, U)
    eps, epsb = ctx.constants["eps"], ctx.constants["epsb"]
    kill = {eps: SuperExpr(), epsb: SuperExpr()}
    rows = []
    for name, text in SUPERCONFORMAL_DISPLAY.items():
        got, shown = X[name], parse_expr(text, ctx)
        got_eps, shown_eps = got - substitute(got, kill), shown - substitute(shown, kill)
        if got == shown:
            verdict = "agrees"
        elif substitute(got, kill) == substitute(shown, kill) and got_eps == SuperExpr.const(-I) * shown_eps:
            verdict = "eps-terms differ by a factor -i"
        else:
            verdict = "mismatch"
        rows.append((name, got, shown, verdict))
    return X, rows


def _superconformal(env: _Env):
    a = env.alpha
    U = env.e("lam*t + 2*t*(eps*thb - th*epsb)")
    X, rows = superconformal_table(a, env.ctx)
    P = reeb(a)
    conditions = (
        interior_product(X, a.expr) == U
        and interior_product(X, a.d) == apply_vf(P, U) * a.expr - exterior_derivative(U, R1N2)
        and lie_derivative(X, a.expr) == time_derivative(U) * a.expr
    )
    cls = classify_contact_vf(X, a)
    table = "; ".join(f"delta {n} = {_show(g)} [{v}]" for n, g, _, v in rows)
    return conditions and cls.kind == "contact", f"{table}; multiplier {_show(cls.multiplier)} ({cls.body_status})"


def _components(env: _Env):
    m = Supermultiplet121.generic()
    d = delta_components(env.susy, m)
    return _compare(
        [
            ("dq", d.q, env.e("i*eps*psi(t) + i*psib(t)*epsb")),
            ("dpsi", d.psi, env.e("(b(t) - q'(t))*epsb")),
            ("dpsib", d.psib, env.e("eps*(b(t) + q'(t))")),
            ("db", d.b, env.e("i*psib'(t)*epsb - i*eps*psi'(t)")),
        ]
    )


def susy_field(chart: Chart, eps, epsb) -> VectorField:
    g = susy_generators(chart)
    return SuperExpr.gen(eps) * g["Q"] + SuperExpr.gen(epsb) * g["Qb"]


def _closure(env: _Env):
    e1, e1b, e2, e2b = (odd_constant(n) for n in ("e1", "e1b", "e2", "e2b"))
    X1, X2 = susy_field(R1N2, e1, e1b), susy_field(R1N2, e2, e2b)
    m = Supermultiplet121.generic()
    d1, d2 = delta_components(X1, m), delta_components(X2, m)
    commutator = Supermultiplet121(*(vary(y, m, d1) - vary(x, m, d2) for x, y in zip(d1, d2)))
    B = graded_commutator(X1, X2)
    scale = SuperExpr.const(I * -2) * (SuperExpr.gen(e1) * SuperExpr.gen(e2b) + SuperExpr.gen(e1b) * SuperExpr.gen(e2))
    expected = multiplet_of(apply_vf(-B, expand_superfield(m, R1N2)), R1N2)
    ok, detail = _compare(
        [("[X1,X2]", B, scale * env.g["P"])]
        + [(f"[d1,d2] {n}", got, want) for n, got, want in zip(("q", "psi", "psib", "b"), commutator, expected)]
    )
    return ok, detail


def _mc(env: _Env):
    return maurer_cartan(exponent_of(N2), R1N2, env.config.order_cap)


def _mc_terminates(env: _Env):
    X = exponent_of(N2)
    dX = exterior_derivative_lie(X, R1N2)
    second = lie_bracket(X, lie_bracket(X, dX))
    mc = _mc(env)
    return mc.order <= 2 and not second, f"nonzero series terms {mc.order}; (ad_X)^2 dX = {second}"


def _mc_stabilizer(env: _Env):
    stab, coset = decompose_mc(_mc(env).omega, {"P"})
    return _compare([("Omega_P", stab["P"], env.alpha.expr)])


def _mc_coset(env: _Env):
    _, coset = decompose_mc(_mc(env).omega, {"P"})
    return _compare([("Omega_Q", coset["Q"], env.e("dth")), ("Omega_Qb", coset["Qb"], env.e("dthb"))])


def _concrete_fields(pres: LieAlgebraPresentation, g: dict[str, VectorField]):
    return {s: g[s] for s in pres.symbols}


def structure_constants_match(pres: LieAlgebraPresentation, fields: dict[str, VectorField]) -> list[str]:
    bad = []
    for a in pres.symbols:
        for b in pres.symbols:
            want = VectorField(fields[a].chart)
            for d, c in pres.bracket(a, b).items():
                want = want + SuperExpr.const(c) * fields[d]
            if graded_commutator(fields[a], fields[b]) != want:
                bad.append(f"[{a},{b}]")
    return bad


def _mc_structure(env: _Env):
    bad = structure_constants_match(N2, _concrete_fields(N2, env.g))
    return not bad, "all brackets agree with the vector fields" if not bad else f"disagree: {', '.join(bad)}"


def _mc_flatness(env: _Env):
    r = flatness_residual(_mc(env), R1N2)
    return not r, f"dW + 1/2[W,W] = {r}"


def _alternative(pres: LieAlgebraPresentation, name: str, sign_bracket, chart: Chart) -> LieAlgebraPresentation:
    coords = {c.name: SuperExpr.gen(c) for c in chart.coordinates}
    exponent = {"P": coords["t"], "Q": coords["th"]}
    if "Qb" in pres.symbols:
        exponent["Qb"] = coords["thb"]
    return presentation(name, pres.basis, sign_bracket, exponent, pres.stabilizer)


N2_REAL = _alternative(N2, "n2-real", {("Q", "Qb"): {"P": I * -2}}, R1N2)
N1_REAL = _alternative(N1, "n1-real", {("Q", "Q"): {"P": I * -2}}, R1N1)


def _mc_real_exponent(env: _Env):
    mc = maurer_cartan(exponent_of(N2_REAL), R1N2, env.config.order_cap)
    W = mc.i_omega
    ok, detail = _compare([("W_P", W["P"], env.alpha.expr), ("W_Q", W["Q"], env.e("dth")), ("W_Qb", W["Qb"], env.e("dthb"))])
    flat = not flatness_residual(mc, R1N2)
    return ok and flat, f"W = exp(-X) d exp(X), X = tP + th Q + thb Qb, [Q,Qb] = -2iP: {detail}; flat {flat}"


# --------------------------------------------------------------------------
# N=1
# --------------------------------------------------------------------------


def _alpha1(env: _Env) -> OneForm:
    return standard_form(R1N1)


def _n1_nonvanishing(env: _Env):
    a = _alpha1(env)
    b = body(a.expr)
    return bool(b), f"alpha = {_show(a.expr)}; body {_show(b)}"


def _n1_kernel(env: _Env):
    dist = kernel_basis(_alpha1(env))
    return _compare([("kernel", list(dist.basis), [parse_vf("@th - i*th*@t", env.ctx1)])])


def _n1_nondegenerate(env: _Env):
    a = _alpha1(env)
    dist = kernel_basis(a)
    ok, detail = _compare(
        [
            ("d(alpha)", a.d, parse_expr("i*dth^2", env.ctx1)),
            ("i_D(d alpha)", interior_product(dist.basis[0], a.d), parse_expr("-2*i*dth", env.ctx1)),
        ]
    )
    nd = nondegenerate_on(a, dist)
    return ok and nd, f"{detail}; nondegenerate {nd}"


def _n1_reeb(env: _Env):
    a = _alpha1(env)
    return _compare([("P", reeb(a), parse_vf("@t", env.ctx1))])


def _n1_bracket(env: _Env):
    g = env.g1
    return _compare(
        [
            ("[Q,Q]", graded_commutator(g["Q"], g["Q"]), parse_vf("2*i*@t", env.ctx1)),
            ("[Q,P]", graded_commutator(g["Q"], g["P"]), VectorField(R1N1)),
        ]
    )


def _n1_invariance(env: _Env):
    a = _alpha1(env)
    phi = CoordinateMap(R1N1, {"t": parse_expr("t + i*eps*th", env.ctx1), "th": parse_expr("th + eps", env.ctx1)})
    return _compare([("pullback(alpha) - alpha", pullback(phi, a.expr) - a.expr, SuperExpr())])


def _n1_structure(env: _Env):
    bad = structure_constants_match(N1, _concrete_fields(N1, env.g1))
    return not bad, "all brackets agree with the vector fields" if not bad else f"disagree: {', '.join(bad)}"


def _n1_mc_stabilizer(env: _Env):
    mc = maurer_cartan(exponent_of(N1), R1N1, env.config.order_cap)
    stab, _ = decompose_mc(mc.omega, {"P"})
    return _compare([("Omega_P", stab["P"], _alpha1(env).expr)])


def _n1_mc_real_exponent(env: _Env):
    mc = maurer_cartan(exponent_of(N1_REAL), R1N1, env.config.order_cap)
    ok, detail = _compare([("W_P", mc.i_omega["P"], _alpha1(env).expr), ("W_Q", mc.i_omega["Q"], parse_expr("dth", env.ctx1))])
    flat = not flatness_residual(mc, R1N1)
    return ok and flat, f"X = tP + th Q, [Q,Q] = -2iP: {detail}; flat {flat}"


CHECKS: tuple[tuple[str, str, str, Callable], ...] = (
    ("n2.bracket.QQb", "N=2 supertranslation algebra", "[Q,Qb] = 2i d/dt", _bracket_qqb),
    ("n2.bracket.vanishing", "N=2 supertranslation algebra", "remaining brackets of Q, Qb, P vanish", _bracket_vanishing),
    ("n2.dalpha", "super contact form", "d(alpha) = 2i dth dthb and d^2 = 0", _dalpha),
    ("n2.kernel", "kernel distribution", "ker(alpha) is spanned by D, Db", _kernel),
    ("n2.nondegenerate", "nondegeneracy", "d(alpha) is nondegenerate on ker(alpha)", _nondegenerate),
    ("n2.invariance", "SUSY invariance", "finite SUSY map preserves alpha", _invariance),
    ("n2.susy.infinitesimal", "SUSY transformations", "eps Q + epsb Qb generates the finite map", _infinitesimal),
    ("n2.strict", "strict contact vector fields", "Q, Qb and eps Q + epsb Qb preserve alpha", _strict),
    ("n2.reeb", "Reeb vector field", "Reeb field is d/dt and closes the strict algebra", _reeb),
    ("n2.frobenius", "non-integrability", "[D,Db] leaves ker(alpha)", _frobenius),
    ("n2.rsymmetry", "R-symmetry", "R-map invariance and R brackets", _rsymmetry),
    ("n2.hamiltonian.closed-form", "contact Hamiltonian vector fields", "solver equals closed form", _ham_closed_form),
    ("n2.hamiltonian.multiplier", "contact Hamiltonian vector fields", "L_X(alpha) = dot(U) alpha", _ham_multiplier),
    ("n2.hamiltonian.susy", "SUSY from a Hamiltonian", "U = 2(eps thb - th epsb) gives eps Q + epsb Qb", _ham_susy),
    ("n2.hamiltonian.susy-normalized", "SUSY from a Hamiltonian", "U = i_X(alpha) recovers eps Q + epsb Qb", _ham_susy_normalized),
    ("n2.hamiltonian.unit", "contact Hamiltonian vector fields", "U = 1 gives the Reeb field", _ham_unit),
    ("n2.hamiltonian.odd", "contact Hamiltonian vector fields", "odd U is rejected", _ham_odd),
    ("n2.superconformal", "superconformal-like transformations", "solver table satisfies the defining conditions", _superconformal),
    ("n2.components", "(1,2,1) supermultiplet", "component SUSY variations", _components),
    ("n2.components.closure", "(1,2,1) supermultiplet", "component algebra closes onto P", _closure),
    ("n2.mc.terminates", "Maurer-Cartan form", "Hadamard series stops after two terms", _mc_terminates),
    ("n2.mc.stabilizer", "Maurer-Cartan form", "P-component of Omega equals alpha", _mc_stabilizer),
    ("n2.mc.coset", "Maurer-Cartan form", "Q, Qb components are dth, dthb", _mc_coset),
    ("n2.mc.structure-constants", "Maurer-Cartan form", "presentation matches the vector fields", _mc_structure),
    ("n2.mc.flatness", "Maurer-Cartan form", "dW + 1/2[W,W] = 0", _mc_flatness),
    ("n2.mc.stabilizer.real-exponent", "Maurer-Cartan form", "real exponent with [Q,Qb] = -2iP yields alpha", _mc_real_exponent),
    ("n1.nonvanishing", "N=1 contact form", "body of alpha is dt", _n1_nonvanishing),
    ("n1.kernel", "N=1 contact form", "ker(alpha) spanned by d/dth - i th d/dt", _n1_kernel),
    ("n1.nondegenerate", "N=1 contact form", "d(alpha) nondegenerate on the kernel", _n1_nondegenerate),
    ("n1.reeb", "N=1 contact form", "Reeb field is d/dt", _n1_reeb),
    ("n1.bracket", "N=1 supertranslation algebra", "[Q,Q] = 2i d/dt, [Q,P] = 0", _n1_bracket),
    ("n1.invariance", "N=1 contact form", "t -> t + i eps th, th -> th + eps preserves alpha", _n1_invariance),
    ("n1.mc.structure-constants", "N=1 supertranslation algebra", "presentation matches the vector fields", _n1_structure),
    ("n1.mc.stabilizer", "N=1 Maurer-Cartan form", "P-component of Omega equals alpha", _n1_mc_stabilizer),
    ("n1.mc.stabilizer.real-exponent", "N=1 Maurer-Cartan form", "real exponent with [Q,Q] = -2iP yields alpha", _n1_mc_real_exponent),
)

CHECK_IDS = tuple(c[0] for c in CHECKS)


def verify_paper(config: VerifyConfig = VerifyConfig(), alpha: OneForm | None = None) -> VerificationReport:
    """Run every check in a fixed order.  ``alpha`` (or ``config.form``)
    replaces the standard N=2 contact form in the form-dependent checks."""
    if alpha is None:
        ctx = Context(R1N2)
        alpha = OneForm(R1N2, parse_expr(config.form, ctx)) if config.form else standard_form(R1N2)
    env = _Env(config, alpha)
    out = []
    for check_id, anchor, description, fn in CHECKS:
        try:
            passed, detail = fn(env)
        except Exception as exc:  # a crashing check is a failed check
            passed, detail = False, f"error: {type(exc).__name__}: {exc}"
        out.append(Check(check_id, anchor, description, bool(passed), detail))
    return VerificationReport(tuple(out))
