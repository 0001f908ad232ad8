import random
from fractions import Fraction

import pytest
import sympy

from rectcum.exactalg import ExactScalar

# Fixed (t, u) evaluation points; none is a nonpositive integer.
TU_POINTS = (
    (Fraction(1, 3), Fraction(2, 5)),
    (Fraction(-7, 2), Fraction(3)),
    (Fraction(5, 4), Fraction(-1, 6)),
    (Fraction(9, 7), Fraction(11, 3)),
    (Fraction(-2, 9), Fraction(-13, 4)),
)

# Fixed (t, u, s) points for the q-deformed routes; s^2 != 1.
TUS_POINTS = (
    (Fraction(1, 3), Fraction(1, 5), Fraction(2, 7)),
    (Fraction(-2, 3), Fraction(3, 4), Fraction(3, 2)),
    (Fraction(5, 2), Fraction(-1, 7), Fraction(1, 2)),
    (Fraction(2), Fraction(1, 9), Fraction(-3, 5)),
    (Fraction(-4, 5), Fraction(-5, 3), Fraction(5, 4)),
)


def to_sympy(x):
    """Independent reading of a value through sympy's parser."""
    if isinstance(x, ExactScalar):
        return sympy.sympify(str(x).replace("^", "**"))
    return sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sympy.sympify(x)


def same_rational_function(x, expr):
    return sympy.simplify(to_sympy(x) - sympy.sympify(expr)) == 0


@pytest.fixture
def rng():
    return random.Random(20240611)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
