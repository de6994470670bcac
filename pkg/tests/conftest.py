import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from supercontact import R1N1, R1N2, Context, Parity, parse_expr, parse_vf

settings.register_profile(
    "repro",
    max_examples=200,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repro")

# every property draws a seed and builds its sample from a seeded Random
seeds = st.integers(min_value=0, max_value=2**32 - 1).map(random.Random)

ACCEPTANCE_LINES: list[str] = []


def make_context(chart=R1N2) -> Context:
    ctx = Context(chart)
    ctx.declare_functions(["q", "b", "a", "c"], Parity.EVEN)
    ctx.declare_functions(["psi", "psib", "chi", "chib"], Parity.ODD)
    return ctx


@pytest.fixture
def ctx():
    return make_context()


@pytest.fixture
def ctx1():
    return make_context(R1N1)


@pytest.fixture
def E(ctx):
    return lambda text: parse_expr(text, ctx)


@pytest.fixture
def V(ctx):
    return lambda text: parse_vf(text, ctx)


@pytest.fixture
def E1(ctx1):
    return lambda text: parse_expr(text, ctx1)


@pytest.fixture
def V1(ctx1):
    return lambda text: parse_vf(text, ctx1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
