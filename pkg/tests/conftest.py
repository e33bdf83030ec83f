from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from newton_subres.algebra import Matrix
from newton_subres.poly import NewtonPoly, PowerPoly

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))
nonzero_rationals = rationals.filter(bool)


def knot_vectors(min_size=0, max_size=8):
    return st.lists(rationals, min_size=min_size, max_size=max_size).map(tuple)


@st.composite
def power_polys(draw, max_degree=6, min_degree=0):
    deg = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(rationals, min_size=deg, max_size=deg))
    return PowerPoly(coeffs + [draw(nonzero_rationals)])


@st.composite
def newton_polys(draw, min_degree=1, max_degree=6):
    n = draw(st.integers(min_degree, max_degree))
    knots = draw(knot_vectors(n, n))
    coeffs = draw(st.lists(rationals, min_size=n, max_size=n))
    return NewtonPoly(knots, coeffs + [draw(nonzero_rationals)])


@st.composite
def square_matrices(draw, max_order=5, min_order=0):
    n = draw(st.integers(min_order, max_order))
    return Matrix(n, n, draw(st.lists(rationals, min_size=n * n, max_size=n * n)))


def cofactor_det(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(n):
        if rows[0][j]:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


# summary lines for the acceptance gate, filled by tests/test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def x():
    return PowerPoly.x()
