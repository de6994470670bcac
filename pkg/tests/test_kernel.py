from fractions import Fraction

import pytest
from hypothesis import given

from supercontact.calculus import R1N2, susy_map
from supercontact.kernel import (
    Coefficient,
    I,
    KernelError,
    Parity,
    SuperExpr,
    as_tree,
    body,
    canonicalize,
    function,
    invert,
    left_partial,
    mul,
    parity_of,
    substitute,
    time_derivative,
)
from supercontact.sampling import SampleConfig, random_expr, random_form, random_term_tree

from conftest import seeds

th, thb, t = (R1N2.coordinate(n) for n in ("th", "thb", "t"))
dth = R1N2.differential_of(th)


def g(x):
    return SuperExpr.gen(x)


def test_coefficients_are_exact_gaussian_rationals():
    assert I * I == Coefficient(-1)
    assert Coefficient(Fraction(1, 3), 2) * 3 == Coefficient(1, 6)
    assert Coefficient(1, 1).inverse() == Coefficient(Fraction(1, 2), Fraction(-1, 2))


def test_odd_square_vanishes(E):
    assert not mul(g(th), g(th))
    assert not E("th*th")


def test_single_transposition(E):
    assert mul(g(thb), g(th)) == -E("th*thb")


def test_even_differential_commutes(E):
    assert not E("dth*thb - thb*dth")


def test_products(E):
    assert E("eps*thb") == -E("thb*eps")
    assert E("(th + eps)*dthb") == E("th*dthb") + E("eps*dthb")
    assert E("(i*thb)*(i*th)") == E("th*thb")


def test_parity_of(E):
    assert parity_of(E("th*thb")) == Parity.EVEN
    assert parity_of(E("dt")) == Parity.ODD
    assert parity_of(E("t + th")) is None


def test_left_partial_examples(E):
    assert left_partial(thb, E("eps*thb")) == -E("eps")
    assert left_partial(dth, E("i*thb*dth")) == E("i*thb")
    assert not left_partial(th, E("t"))
    assert left_partial(t, E("t^3")) == E("3*t^2")


def test_time_derivative_examples(E):
    assert time_derivative(E("q(t)")) == E("q'(t)")
    assert time_derivative(E("th*psi(t)")) == E("th*psi'(t)")
    ups = E("lam*t + 2*t*(eps*thb - th*epsb)")
    assert time_derivative(ups) == E("lam + 2*(eps*thb - th*epsb)")


def test_body_examples(E):
    assert body(E("dt + i*(th*dthb + thb*dth)")) == E("dt")
    assert body(time_derivative(E("lam*t + 2*t*(eps*thb - th*epsb)"))) == E("lam")
    assert not body(E("th*thb"))


def test_invert_examples(E):
    assert invert(E("1 + i*th*thb")) == E("1 - i*th*thb")
    assert invert(E("2")) == E("1/2")
    with pytest.raises(KernelError, match="body not a nonzero constant"):
        invert(E("th*thb"))
    with pytest.raises(KernelError):
        invert(E("t"))


def test_substitute_examples(E):
    assert substitute(E("th*thb"), {th: E("th + eps")}) == E("th*thb + eps*thb")
    phi = susy_map(R1N2)
    assert phi["t"] == E("t + i*(eps*thb - th*epsb)")
    e = E("t*th + dthb*q(t)")
    assert substitute(e, {}) == e
    with pytest.raises(KernelError, match="parity mismatch in substitution"):
        substitute(e, {th: E("t")})


def test_function_generators_of_distinct_order_differ():
    assert function("q", 0, 1) != function("q", 0, 2)
    assert function("q", 0, 1) == function("q", 0).derivative()


def test_as_tree_spells_out_monomials(E):
    e = E("2*i*th*thb*t^2 - eps")
    assert canonicalize(as_tree(e)) == e


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


@given(seeds)
def test_canonicalization_idempotent(rng):
    e = canonicalize(random_term_tree(rng, R1N2))
    assert canonicalize(as_tree(e)) == e


@given(seeds)
def test_supercommutativity(rng):
    pa, pb = Parity(rng.randint(0, 1)), Parity(rng.randint(0, 1))
    a = random_form(rng, R1N2, pa)
    b = random_form(rng, R1N2, pb)
    sign = -1 if pa and pb else 1
    assert mul(a, b) == mul(b, a).scale(sign)


@given(seeds)
def test_associativity_and_distributivity(rng):
    a, b, c = (random_form(rng, R1N2) for _ in range(3))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b + c) == mul(a, b) + mul(a, c)
    assert mul(a + b, c) == mul(a, c) + mul(b, c)


@given(seeds)
def test_invert_is_a_two_sided_inverse(rng):
    n = random_form(rng, R1N2, Parity.EVEN)
    nilpotent = n - body(n)
    e = nilpotent + SuperExpr.const(rng.choice([1, -2, Coefficient(1, 1), Coefficient(Fraction(1, 3), -1)]))
    assert mul(e, invert(e)) == 1
    assert mul(invert(e), e) == 1


def _generators(rng):
    pool = list(R1N2.coordinates) + list(R1N2.differentials)
    return rng.choice(pool), rng.choice(pool)


@given(seeds)
def test_left_partials_graded_commute(rng):
    e = random_form(rng, R1N2, cfg=SampleConfig(max_terms=4, extras=False))
    a, b = _generators(rng)
    sign = -1 if a.is_odd and b.is_odd else 1
    assert left_partial(a, left_partial(b, e)) == left_partial(b, left_partial(a, e)).scale(sign)
    if a.is_odd:
        assert not left_partial(a, left_partial(a, e))


@given(seeds)
def test_time_derivative_commutes_with_partials(rng):
    e = random_form(rng, R1N2)
    for gen in R1N2.coordinates + R1N2.differentials:
        if gen != t:
            assert time_derivative(left_partial(gen, e)) == left_partial(gen, time_derivative(e))


@given(seeds)
def test_parity_of_products_adds(rng):
    pa, pb = Parity(rng.randint(0, 1)), Parity(rng.randint(0, 1))
    a, b = random_expr(rng, R1N2, pa), random_expr(rng, R1N2, pb)
    prod = mul(a, b)
    if prod:
        assert parity_of(prod) == pa + pb
