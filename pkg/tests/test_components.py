import pytest
from hypothesis import given

from supercontact.calculus import R1N2, apply_vf, graded_commutator, susy_generators
from supercontact.checks import susy_field
from supercontact.components import (
    ComponentError,
    Supermultiplet121,
    collect_components,
    delta_components,
    expand_superfield,
    multiplet_of,
    vary,
)
from supercontact.kernel import SuperExpr, odd_constant
from supercontact.sampling import random_polynomial_multiplet, random_superfield

from conftest import seeds

M = Supermultiplet121.generic()
G = susy_generators(R1N2)
SUSY = "eps*@th + epsb*@thb + i*(eps*thb - th*epsb)*@t"


def test_expand_generic(E):
    assert expand_superfield(M) == E("q(t) + i*th*psi(t) + i*psib(t)*thb + i*th*thb*b(t)")
    bare = Supermultiplet121(M.q, SuperExpr(), SuperExpr(), SuperExpr())
    assert expand_superfield(bare) == E("q(t)")
    ups = Supermultiplet121.generic(("a", "chi", "chib", "c"))
    assert expand_superfield(ups) == E("a(t) + i*th*chi(t) + i*chib(t)*thb + i*th*thb*c(t)")


def test_collect(E):
    assert collect_components(E("th*thb")) == {(): 0, ("th",): 0, ("thb",): 0, ("th", "thb"): 1}
    assert multiplet_of(expand_superfield(M)) == M
    with pytest.raises(ComponentError, match="contains differentials"):
        collect_components(E("dt"))


def test_susy_variation_table(E, V):
    d = delta_components(V(SUSY), M)
    assert d.q == E("i*eps*psi(t) + i*psib(t)*epsb")
    assert d.psi == E("(b(t) - q'(t))*epsb")
    assert d.psib == E("eps*(b(t) + q'(t))")
    assert d.b == E("i*psib'(t)*epsb - i*eps*psi'(t)")


def test_time_translation(E):
    d = delta_components(G["P"], M)
    assert list(d) == [E("q'(t)"), E("psi'(t)"), E("psib'(t)"), E("b'(t)")]


def test_r_charges(E):
    d = delta_components(G["R"], M)
    # engine output: psi and psib carry opposite charges, q and b are neutral
    assert d == Supermultiplet121(SuperExpr(), E("-i*psi(t)"), E("i*psib(t)"), SuperExpr())


def test_odd_variation_rejected():
    with pytest.raises(ComponentError, match="variation not expressible in multiplet shape"):
        delta_components(G["Q"], M)


def test_vary_respects_derivatives(E):
    delta = Supermultiplet121(E("psi(t)*eps"), SuperExpr(), SuperExpr(), SuperExpr())
    assert vary(E("q'(t)^2"), M, delta) == E("2*q'(t)*psi'(t)*eps")


def test_closure_on_components(E):
    e1, e1b, e2, e2b = (odd_constant(n) for n in ("e1", "e1b", "e2", "e2b"))
    X1, X2 = susy_field(R1N2, e1, e1b), susy_field(R1N2, e2, e2b)
    B = graded_commutator(X1, X2)
    assert B == E("const odd e1, e1b, e2, e2b; -2*i*(e1*e2b + e1b*e2)") * G["P"]
    d1, d2 = delta_components(X1, M), delta_components(X2, M)
    commutator = [vary(y, M, d1) - vary(x, M, d2) for x, y in zip(d1, d2)]
    # two successive variations compose in the opposite order to the vector fields
    expected = multiplet_of(apply_vf(-B, expand_superfield(M)))
    assert commutator == list(expected)


@given(seeds)
def test_roundtrip_random_multiplets(rng):
    m = random_polynomial_multiplet(rng, R1N2)
    assert multiplet_of(expand_superfield(m)) == m


@given(seeds)
def test_collect_reassembles(rng):
    phi = random_superfield(rng, R1N2)
    comps = collect_components(phi)
    th, thb = (SuperExpr.gen(R1N2.coordinate(n)) for n in ("th", "thb"))
    basis = {(): SuperExpr.const(1), ("th",): th, ("thb",): thb, ("th", "thb"): th * thb}
    total = SuperExpr()
    for key, value in comps.items():
        total = total + basis[key] * value
    assert total == phi
