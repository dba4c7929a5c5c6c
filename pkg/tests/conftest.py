import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from ladic import PrimeContext, from_pair

PRIMES = (2, 3, 5)

#: Lines recorded by test_acceptance, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def random_rational(rng: random.Random, bound: int = 10**4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_element(rng: random.Random, ctx, bound: int = 10**4):
    return from_pair(random_rational(rng, bound), random_rational(rng, bound), ctx)


def rationals(bound: int = 10**4):
    return st.builds(
        Fraction,
        st.integers(min_value=-bound, max_value=bound),
        st.integers(min_value=1, max_value=bound),
    )


def elements(ctx, bound: int = 10**4):
    return st.builds(lambda q, r: from_pair(q, r, ctx), rationals(bound), rationals(bound))


@pytest.fixture(params=PRIMES, ids=lambda p: f"ell={p}")
def ctx(request):
    return PrimeContext(request.param)


@pytest.fixture
def ctx3():
    return PrimeContext(3)


@pytest.fixture
def rng():
    return random.Random(20261016)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
