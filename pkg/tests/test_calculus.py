import pytest
from hypothesis import given

from supercontact.calculus import (
    R1N1,
    R1N2,
    CalculusError,
    Chart,
    CoordinateMap,
    VectorField,
    apply_vf,
    chart_from_declaration,
    exterior_derivative,
    graded_commutator,
    interior_product,
    lie_derivative,
    pullback,
    r_map,
    susy_generators,
    susy_map,
)
from supercontact.contact import standard_form
from supercontact.kernel import I, Parity, SuperExpr
from supercontact.sampling import random_form, random_map, random_vector_field

from conftest import seeds

G = susy_generators(R1N2)
ALPHA = standard_form(R1N2).expr
ZERO = VectorField(R1N2)


def sign(p, q):
    return -1 if p and q else 1


def test_apply_vf_examples(E, V):
    assert apply_vf(G["Q"], E("t")) == E("i*thb")
    assert not apply_vf(G["P"], E("th"))
    susy = V("eps*@th + epsb*@thb + i*(eps*thb - th*epsb)*@t")
    assert apply_vf(susy, E("t")) == E("i*(eps*thb - th*epsb)")
    assert E("eps") * G["Q"] + E("epsb") * G["Qb"] == susy


def test_commutator_examples(V):
    assert graded_commutator(G["Q"], G["Qb"]) == V("2*i*@t")
    assert graded_commutator(G["D"], G["Db"]) == V("-2*i*@t")
    assert graded_commutator(G["R"], G["Q"]) == SuperExpr.const(I) * G["Q"]


def test_commutator_rejects_inhomogeneous(V):
    with pytest.raises(CalculusError, match="inhomogeneous argument"):
        graded_commutator(V("@t + @th"), G["Q"])


def test_odd_self_bracket_is_twice_the_square(V, E):
    Q = G["Q"]
    square = VectorField(R1N2, {c: apply_vf(Q, apply_vf(Q, E(c.name))) for c in R1N2.coordinates})
    assert graded_commutator(Q, Q) == SuperExpr.const(2) * square


def test_exterior_derivative_examples(E):
    assert exterior_derivative(ALPHA, R1N2) == E("2*i*dth*dthb")
    assert exterior_derivative(E("t"), R1N2) == E("dt")
    assert exterior_derivative(E("q(t)"), R1N2) == E("dt*q'(t)")


def test_interior_product_examples(E, V):
    omega = exterior_derivative(ALPHA, R1N2)
    assert interior_product(G["D"], omega) == E("-2*i*dthb")
    assert interior_product(G["Db"], omega) == E("-2*i*dth")
    assert interior_product(G["P"], ALPHA) == 1
    assert not interior_product(ZERO, omega)


def test_lie_derivative_examples(V):
    assert not lie_derivative(G["Q"], ALPHA)
    assert not lie_derivative(G["Qb"], ALPHA)
    assert not lie_derivative(G["P"], ALPHA)
    assert not lie_derivative(V("eps*@th + epsb*@thb + i*(eps*thb - th*epsb)*@t"), ALPHA)


def test_pullback_examples(E):
    phi = susy_map(R1N2)
    assert phi.differential_image("t") == E("dt - i*epsb*dth - i*eps*dthb")
    assert pullback(phi, ALPHA) == ALPHA
    form = E("t*dth + q(t)*th*dt")
    assert pullback(CoordinateMap.identity(R1N2), form) == form


def test_pullback_expands_functions_under_nilpotent_shifts(E):
    phi = CoordinateMap(R1N2, {"t": E("t + eps*th")})
    assert pullback(phi, E("q(t)")) == E("q(t) + eps*th*q'(t)")
    with pytest.raises(CalculusError):
        pullback(CoordinateMap(R1N2, {"t": E("2*t")}), E("q(t)"))


def test_susy_generators(V, V1):
    assert G["Q"] == V("@th + i*thb*@t")
    assert susy_generators(R1N1)["D"] == V1("@th - i*th*@t")
    assert not graded_commutator(G["R"], G["P"])
    with pytest.raises(CalculusError, match="unknown chart"):
        susy_generators(chart_from_declaration("r1n3", ["t"], ["a", "b", "c"]))


def test_vanishing_brackets():
    for a, b in [("Q", "Q"), ("Qb", "Qb"), ("Q", "P"), ("Qb", "P"), ("P", "P")]:
        assert not graded_commutator(G[a], G[b]), (a, b)


def test_r_table():
    i = SuperExpr.const(I)
    assert graded_commutator(G["R"], G["Q"]) == i * G["Q"]
    assert graded_commutator(G["R"], G["Qb"]) == -(i * G["Qb"])
    assert not graded_commutator(G["R"], G["P"])
    assert not graded_commutator(G["R"], G["R"])


def test_mixed_table():
    for a, b in [("Q", "D"), ("Qb", "Db"), ("Q", "Db"), ("Qb", "D")]:
        assert not graded_commutator(G[a], G[b]), (a, b)


def test_r_map_invariance(E):
    assert pullback(r_map(R1N2, E("eps*epsb")), ALPHA) == ALPHA
    with pytest.raises(CalculusError):
        r_map(R1N2, E("t"))


def test_infinitesimal_matches_finite(V):
    phi = susy_map(R1N2)
    X = V("eps*@th + epsb*@thb + i*(eps*thb - th*epsb)*@t")
    for c in R1N2.coordinates:
        assert apply_vf(X, SuperExpr.gen(c)) == phi[c] - SuperExpr.gen(c)


def test_vector_field_parity(V):
    assert G["Q"].parity == Parity.ODD
    assert G["R"].parity == Parity.EVEN
    assert V("@t + @th").parity is None
    parts = V("@t + @th").split()
    assert parts[Parity.EVEN] == V("@t") and parts[Parity.ODD] == V("@th")


def test_chart_declaration():
    c = chart_from_declaration("x", ["t", "s"], ["th"])
    assert isinstance(c, Chart)
    assert [d.name for d in c.differentials] == ["dt", "ds", "dth"]
    assert [d.parity for d in c.differentials] == [Parity.ODD, Parity.ODD, Parity.EVEN]


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


def _homogeneous(rng):
    p = Parity(rng.randint(0, 1))
    return random_vector_field(rng, R1N2, p), p


@given(seeds)
def test_graded_jacobi(rng):
    (X, px), (Y, py), (Z, _) = _homogeneous(rng), _homogeneous(rng), _homogeneous(rng)
    lhs = graded_commutator(X, graded_commutator(Y, Z))
    rhs = graded_commutator(graded_commutator(X, Y), Z) + SuperExpr.const(sign(px, py)) * graded_commutator(
        Y, graded_commutator(X, Z)
    )
    assert lhs == rhs


@given(seeds)
def test_d_squared_vanishes(rng):
    f = random_form(rng, R1N2)
    assert not exterior_derivative(exterior_derivative(f, R1N2), R1N2)


@given(seeds)
def test_interior_products_graded_commute(rng):
    (X, px), (Y, py) = _homogeneous(rng), _homogeneous(rng)
    w = random_form(rng, R1N2)
    s = sign(px + 1 & 1, py + 1 & 1)
    assert interior_product(X, interior_product(Y, w)) == interior_product(Y, interior_product(X, w)).scale(s)


@given(seeds)
def test_lie_derivative_of_bracket(rng):
    (X, px), (Y, py) = _homogeneous(rng), _homogeneous(rng)
    w = random_form(rng, R1N2)
    lhs = lie_derivative(graded_commutator(X, Y), w)
    rhs = lie_derivative(X, lie_derivative(Y, w)) - lie_derivative(Y, lie_derivative(X, w)).scale(sign(px, py))
    assert lhs == rhs


@given(seeds)
def test_lie_derivative_is_cartan_formula_on_functions(rng):
    X, _ = _homogeneous(rng)
    f = random_form(rng, R1N2)
    f = f - SuperExpr({k: v for k, v in f.terms.items() if any(g in R1N2.differentials for g in SuperExpr({k: v}).generators())})
    assert lie_derivative(X, f) == apply_vf(X, f)


@given(seeds)
def test_pullback_functorial(rng):
    phi, psi = random_map(rng, R1N2), random_map(rng, R1N2)
    w = random_form(rng, R1N2)
    assert pullback(phi.compose(psi), w) == pullback(psi, pullback(phi, w))


@given(seeds)
def test_pullback_commutes_with_d(rng):
    phi = random_map(rng, R1N2)
    w = random_form(rng, R1N2)
    assert pullback(phi, exterior_derivative(w, R1N2)) == exterior_derivative(pullback(phi, w), R1N2)
