"""Exact arithmetic: rationals, polynomials and rational functions in
``t, u, s``, generic symbolic sequences, and truncated power series."""
from fractions import Fraction as Rational

from ._poly import MultiPoly, format_rational, parse_rational
from ._scalar import ExactScalar, S, T, U
from ._series import (
    TruncatedSeries,
    coefficient_at,
    constant_term,
    series_derivative,
    series_exp,
    series_log,
    series_mul,
)
from ._special import inverse_sqrt_base, pochhammer, q_factorial, q_number, q_pochhammer
from ._sympoly import SymPoly, symbols

__all__ = [
    "Rational",
    "MultiPoly",
    "ExactScalar",
    "SymPoly",
    "TruncatedSeries",
    "T",
    "U",
    "S",
    "symbols",
    "parse_rational",
    "format_rational",
    "pochhammer",
    "q_pochhammer",
    "q_number",
    "q_factorial",
    "inverse_sqrt_base",
    "series_exp",
    "series_log",
    "series_mul",
    "series_derivative",
    "constant_term",
    "coefficient_at",
    "to_json_value",
    "from_json_value",
]


def to_json_value(x):
    """Serialize a Fraction/ExactScalar (rational -> "p/q")."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Rational):
        return format_rational(x)
    if isinstance(x, ExactScalar):
        return x.to_json()
    raise TypeError(f"cannot serialize {type(x).__name__}")


def from_json_value(data):
    """Inverse of :func:`to_json_value`; rationals come back as Fraction."""
    if isinstance(data, (str, int)):
        return parse_rational(data)
    value = ExactScalar.from_json(data)
    return value.to_fraction() if value.is_rational() else value
