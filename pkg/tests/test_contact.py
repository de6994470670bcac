import random

import pytest
from hypothesis import given

from supercontact.calculus import R1N1, R1N2, graded_commutator, interior_product, lie_derivative, susy_generators
from supercontact.checks import superconformal_table
from supercontact.contact import (
    ContactError,
    HamiltonianError,
    OneForm,
    classify_contact_vf,
    hamiltonian_vf,
    hamiltonian_vf_closed_form,
    infinitesimal_transformations,
    is_contact,
    is_nonvanishing,
    kernel_basis,
    nondegenerate_on,
    pairing_matrix,
    reeb,
    standard_form,
)
from supercontact.kernel import Parity, SuperExpr, time_derivative
from supercontact.sampling import random_expr, random_superfield

from conftest import seeds

ALPHA = standard_form(R1N2)
ALPHA1 = standard_form(R1N1)
G = susy_generators(R1N2)
GENERIC = "a(t) + i*th*chi(t) + i*chib(t)*thb + i*th*thb*c(t)"
SUSY = "eps*@th + epsb*@thb + i*(eps*thb - th*epsb)*@t"


def form(E, text, chart=R1N2):
    return OneForm(chart, E(text))


def test_one_form_validation(E):
    with pytest.raises(ContactError):
        OneForm(R1N2, E("t"))
    with pytest.raises(ContactError):
        OneForm(R1N2, E("dt*dth"))
    assert ALPHA.coefficient("th") == E("i*thb")


def test_nonvanishing(E, E1):
    assert is_nonvanishing(ALPHA)
    assert not is_nonvanishing(form(E, "thb*dth"))
    assert is_nonvanishing(form(E1, "dt + i*th*dth", R1N1))


def test_kernel_examples(E, V, V1):
    assert list(kernel_basis(ALPHA).basis) == [G["D"], G["Db"]]
    assert kernel_basis(ALPHA).corank == (1, 0)
    assert list(kernel_basis(ALPHA1).basis) == [V1("@th - i*th*@t")]
    assert list(kernel_basis(form(E, "dt")).basis) == [V("@th"), V("@thb")]
    with pytest.raises(ContactError, match="dt-coefficient not invertible"):
        kernel_basis(form(E, "t*dt + dth"))


def test_nondegeneracy(E):
    assert nondegenerate_on(ALPHA, kernel_basis(ALPHA))
    assert nondegenerate_on(ALPHA1, kernel_basis(ALPHA1))
    flat = form(E, "dt")
    assert not nondegenerate_on(flat, kernel_basis(flat))
    assert pairing_matrix(ALPHA, kernel_basis(ALPHA)) == [[0, E("2*i")], [E("2*i"), 0]]
    assert is_contact(ALPHA) and not is_contact(flat)


def test_reeb_examples(E, V, V1):
    assert reeb(ALPHA) == V("@t")
    assert reeb(ALPHA1) == V1("@t")
    double = ALPHA.scale(2)
    P = reeb(double)
    assert P == V("1/2*@t")
    assert interior_product(P, double.expr) == 1


def test_reeb_is_strict():
    assert classify_contact_vf(reeb(ALPHA), ALPHA).kind == "strict"


def test_hamiltonian_examples(E, V):
    assert hamiltonian_vf(ALPHA, E("1")) == V("@t")
    ups = E(GENERIC)
    assert hamiltonian_vf(ALPHA, ups) == hamiltonian_vf_closed_form(ups)
    with pytest.raises(HamiltonianError, match="odd superfield rejected"):
        hamiltonian_vf(ALPHA, E("th"))
    with pytest.raises(HamiltonianError, match="not in component form"):
        hamiltonian_vf_closed_form(E("dt*dth"))


def test_closed_form_display(E, V):
    X = hamiltonian_vf_closed_form(E(GENERIC))
    assert X["t"] == E("a(t) + i/2*(th*chi(t) + chib(t)*thb)")
    assert X["th"] == apply_half_i(E, G["Db"], GENERIC)
    assert X["thb"] == apply_half_i(E, G["D"], GENERIC)
    assert hamiltonian_vf_closed_form(E("1")) == V("@t")


def apply_half_i(E, D, text):
    return E("i/2") * D(E(text))


def test_susy_superfield_as_stated(E, V):
    # the stated superfield recovers -i(eps Q + epsb Qb); see the normalized variant below
    X = hamiltonian_vf(ALPHA, E("2*(eps*thb - th*epsb)"))
    assert X == E("-i") * V(SUSY)


def test_susy_superfield_normalized(E, V):
    ups = interior_product(V(SUSY), ALPHA.expr)
    assert ups == E("2*i*(eps*thb - th*epsb)")
    assert hamiltonian_vf(ALPHA, ups) == V(SUSY)


def test_classification_examples(E, V):
    assert classify_contact_vf(G["Q"], ALPHA).kind == "strict"
    ups = E(GENERIC)
    c = classify_contact_vf(hamiltonian_vf(ALPHA, ups), ALPHA)
    assert c.kind == "contact"
    assert c.multiplier == time_derivative(ups)
    assert c.body_status == "assumed-nonvanishing"
    assert classify_contact_vf(V("@th"), ALPHA).kind == "none"
    dilation = classify_contact_vf(V("t*@t + 1/2*th*@th + 1/2*thb*@thb"), ALPHA)
    assert (dilation.kind, dilation.multiplier, dilation.body_status) == ("contact", E("1"), "nonzero-constant")


def test_infinitesimal_transformations(E, V):
    table = infinitesimal_transformations(V(SUSY))
    assert table == {"t": E("i*(eps*thb - th*epsb)"), "th": E("eps"), "thb": E("epsb")}


def test_superconformal_table(ctx, E):
    X, rows = superconformal_table(ALPHA, ctx)
    ups = E("lam*t + 2*t*(eps*thb - th*epsb)")
    assert interior_product(X, ALPHA.expr) == ups
    assert lie_derivative(X, ALPHA.expr) == time_derivative(ups) * ALPHA.expr
    assert X["t"] == E("lam*t + t*(eps*thb - th*epsb)")
    assert X["th"] == E("lam/2*th - i*eps*t - th*thb*eps")
    assert X["thb"] == E("lam/2*thb + th*thb*epsb - i*epsb*t")
    assert [v for *_, v in rows] == ["eps-terms differ by a factor -i"] * 3
    c = classify_contact_vf(X, ALPHA)
    assert c.multiplier == E("lam + 2*(eps*thb - th*epsb)")


def test_frobenius_failure(V):
    Z = graded_commutator(G["D"], G["Db"])
    assert Z == V("-2*i*@t")
    assert interior_product(Z, ALPHA.expr)


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


@given(seeds)
def test_kernel_vectors_annihilate_random_forms(rng):
    dt, dth, dthb = (SuperExpr.gen(d) for d in R1N2.differentials)
    f, g = random_expr(rng, R1N2, Parity.ODD), random_expr(rng, R1N2, Parity.ODD)
    a = OneForm(R1N2, dt + f * dthb + g * dth)
    dist = kernel_basis(a)
    assert len(dist.basis) == 2
    for X in dist.basis:
        assert not interior_product(X, a.expr)


@given(seeds)
def test_solver_matches_closed_form(rng):
    ups = random_superfield(rng, R1N2)
    assert hamiltonian_vf(ALPHA, ups) == hamiltonian_vf_closed_form(ups)


@given(seeds)
def test_hamiltonian_multiplier_law(rng):
    ups = random_superfield(rng, R1N2)
    X = hamiltonian_vf(ALPHA, ups)
    assert lie_derivative(X, ALPHA.expr) == time_derivative(ups) * ALPHA.expr


@given(seeds)
def test_hamiltonian_map_is_linear(rng):
    u1, u2 = random_superfield(rng, R1N2, 2), random_superfield(rng, R1N2, 2)
    assert hamiltonian_vf(ALPHA, u1 + u2) == hamiltonian_vf(ALPHA, u1) + hamiltonian_vf(ALPHA, u2)


def test_time_independent_superfields_are_strict():
    rng = random.Random(11)
    for _ in range(10):
        ups = random_superfield(rng, R1N2, 0)
        X = hamiltonian_vf(ALPHA, ups)
        assert classify_contact_vf(X, ALPHA).kind == "strict"
