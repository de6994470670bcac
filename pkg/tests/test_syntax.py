from fractions import Fraction

import pytest
from hypothesis import given

from supercontact.calculus import R1N1, R1N2, VectorField, susy_generators
from supercontact.contact import standard_form
from supercontact.kernel import Coefficient, Parity, SuperExpr, parity_of
from supercontact.lie import N2, maurer_cartan, exponent_of
from supercontact.sampling import SampleConfig, random_form, random_vector_field
from supercontact.syntax import (
    Context,
    ParseError,
    parse_algebra,
    parse_chart,
    parse_expr,
    parse_map,
    parse_vf,
    preamble_for,
    print_canonical,
    print_vector_field,
)

from conftest import seeds

G = susy_generators(R1N2)


def test_parse_contact_form(E):
    assert E("dt + i*(th*dthb + thb*dth)") == standard_form(R1N2).expr


def test_parse_rational_imaginary(E):
    assert E("2/3 * i") == SuperExpr.const(Coefficient(0, Fraction(2, 3)))


def test_parse_superfield(ctx):
    e = parse_expr("q(t) + i*th*psi(t) + i*psib(t)*thb + i*th*thb*b(t)", ctx)
    assert parity_of(e) == Parity.EVEN
    assert len(e.terms) == 4


def test_parse_powers_and_derivatives(E):
    assert E("t^3") == E("t*t*t")
    assert E("q''(t)") != E("q'(t)")
    assert E("(1 + th*thb)/(1 - th*thb)") == E("1 + 2*th*thb")


def test_parse_vector_fields(V):
    assert V("@th + i*thb*@t") == G["Q"]
    assert V("@t") == G["P"]
    assert V("-i*(th*@th - thb*@thb)") == G["R"]
    assert V("0") == VectorField(R1N2)


def test_printer_examples(E):
    assert print_canonical(E("2*i*dth*dthb")) == "2*i*dth*dthb"
    assert print_canonical(SuperExpr()) == "0"
    assert print_canonical(E("-th*thb")) == "-th*thb"
    assert print_canonical(E("(1 + i)*t - 1/2*i")) == "-1/2*i + (1 + i)*t"
    assert print_vector_field(G["Q"]) == "i*thb*@t + @th"


def test_error_locations(ctx):
    with pytest.raises(ParseError) as err:
        parse_expr("t +\n  * th", ctx)
    assert (err.value.line, err.value.col, err.value.token) == (2, 3, "*")
    with pytest.raises(ParseError, match="unknown identifier"):
        parse_expr("zeta", ctx)
    with pytest.raises(ParseError, match="parity-inference failure"):
        parse_expr("f(t)", ctx)
    with pytest.raises(ParseError):
        parse_expr("t ~ 1", ctx)
    with pytest.raises(ParseError):
        parse_vf("t*@t*th", ctx)


def test_preamble_declarations():
    ctx = Context(R1N2)
    e = parse_expr("fn odd eta; const odd kappa; eta(t)*kappa", ctx)
    assert parity_of(e) == Parity.EVEN
    assert "eta" not in ctx.functions


def test_parse_chart():
    chart = parse_chart("chart r1n1 { even t; odd th; }")
    assert chart == R1N1
    with pytest.raises(ParseError):
        parse_chart("chart x { weird t; }")


def test_parse_map(ctx):
    phi = parse_map("map s { t -> t + i*(eps*thb - th*epsb); th -> th + eps; thb -> thb + epsb; }", ctx)
    assert phi["t"] == parse_expr("t + i*(eps*thb - th*epsb)", ctx)
    assert phi["th"] == parse_expr("th + eps", ctx)
    with pytest.raises(ParseError, match="unknown coordinate"):
        parse_map("map s { x -> t; }", ctx)
    with pytest.raises(ParseError):
        parse_map("map s { th -> t; }", ctx)


def test_parse_algebra(ctx):
    text = "algebra n2 { even P; odd Q, Qb; bracket [Q,Qb] = 2*i*P; exponent i*(t*P + th*Q + thb*Qb); stabilizer P; }"
    pres = parse_algebra(text, ctx)
    assert pres.basis == N2.basis and pres.brackets == N2.brackets and pres.stabilizer == N2.stabilizer
    assert maurer_cartan(exponent_of(pres), R1N2).i_omega.terms == maurer_cartan(exponent_of(N2), R1N2).i_omega.terms


def test_algebra_coefficients_left_of_basis(ctx):
    pres = parse_algebra("algebra x { even P; odd Q; bracket [Q,Q] = 2*i*P; exponent Q*th + t*P; }", ctx)
    assert pres.exponent["Q"] == parse_expr("-th", ctx)


def test_algebra_errors(ctx):
    with pytest.raises(ParseError, match="Jacobi|antisymmetry|parity"):
        parse_algebra("algebra x { even P; odd Q; bracket [Q,P] = P; }", ctx)
    with pytest.raises(ParseError, match="numbers"):
        parse_algebra("algebra x { even P; odd Q; bracket [Q,Q] = t*P; }", ctx)
    with pytest.raises(ParseError, match="linear"):
        parse_algebra("algebra x { even P; odd Q; bracket [Q,Q] = P*P; }", ctx)


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


def _reparse(text, value, chart=R1N2):
    return parse_expr(preamble_for(value) + " " + text, Context(chart))


@given(seeds)
def test_print_parse_roundtrip(rng):
    e = random_form(rng, R1N2, cfg=SampleConfig(max_terms=4))
    assert _reparse(print_canonical(e), e) == e


@given(seeds)
def test_vector_field_roundtrip(rng):
    X = random_vector_field(rng, R1N2, Parity(rng.randint(0, 1)))
    text = print_vector_field(X)
    assert parse_vf(preamble_for(X) + " " + text, Context(R1N2)) == X


@given(seeds)
def test_printer_deterministic(rng):
    e = random_form(rng, R1N2, cfg=SampleConfig(max_terms=5))
    items = list(e.terms.items())
    rng.shuffle(items)
    assert print_canonical(SuperExpr(dict(items))) == print_canonical(e)
