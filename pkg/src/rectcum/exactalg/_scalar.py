"""Normalized rational functions in ``t, u, s`` over Q."""
from __future__ import annotations

from fractions import Fraction

from ._poly import MultiPoly, format_rational, poly_gcd_cofactors

_ONE_POLY = MultiPoly.constant(1)


def _make_monic(numer: MultiPoly, denom: MultiPoly):
    _, lc = denom.leading_term()
    if lc == 1:
        return numer, denom
    inv = 1 / lc
    return numer * inv, denom * inv


def _cancel(numer: MultiPoly, denom: MultiPoly):
    if denom.is_zero():
        raise ZeroDivisionError("ExactScalar with zero denominator")
    if numer.is_zero():
        return numer, _ONE_POLY
    if denom.is_constant():
        return numer * (1 / denom.constant_value()), _ONE_POLY
    if numer.is_constant():
        return _make_monic(numer, denom)
    _, numer, denom = poly_gcd_cofactors(numer, denom)
    if denom.is_constant():
        return numer * (1 / denom.constant_value()), _ONE_POLY
    return _make_monic(numer, denom)


class ExactScalar:
    """Element of Q(t, u, s) kept as ``numer / denom`` in lowest terms.

    The denominator is monic with respect to graded-lex order, so two
    equal values always have identical representations.
    """

    __slots__ = ("numer", "denom", "_hash")

    def __init__(self, numer=0, denom=1):
        numer = _as_poly(numer)
        denom = _as_poly(denom)
        self.numer, self.denom = _cancel(numer, denom)
        self._hash = None

    @classmethod
    def _raw(cls, numer, denom=_ONE_POLY):
        obj = cls.__new__(cls)
        obj.numer = numer
        obj.denom = denom
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, value):
        return cls._raw(MultiPoly.constant(value))

    @classmethod
    def from_poly(cls, poly):
        return cls._raw(poly)

    # -- predicates ---------------------------------------------------

    def is_polynomial(self):
        return self.denom.is_one()

    def is_rational(self):
        return self.denom.is_one() and self.numer.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not a pure rational")
        return self.numer.constant_value()

    def free_symbols(self):
        from ._poly import VARIABLES

        return {
            name
            for name in VARIABLES
            if self.numer.degree_in(name) > 0 or self.denom.degree_in(name) > 0
        }

    def __bool__(self):
        return not self.numer.is_zero()

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return ExactScalar._raw(MultiPoly.constant(other))
        if isinstance(other, MultiPoly):
            return ExactScalar._raw(other)
        return None

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self
            if self.denom.is_one():
                return ExactScalar._raw(self.numer + other)
            return ExactScalar._raw(self.numer + self.denom * other, self.denom)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.denom.is_one() and other.denom.is_one():
            return ExactScalar._raw(self.numer + other.numer)
        if other.denom.is_one():
            return ExactScalar._raw(self.numer + self.denom * other.numer, self.denom)
        if self.denom.is_one():
            return ExactScalar._raw(other.numer + other.denom * self.numer, other.denom)
        if self.denom == other.denom:
            return ExactScalar(self.numer + other.numer, self.denom)
        g, d1, d2 = poly_gcd_cofactors(self.denom, other.denom)
        # lcm = d1 * other.denom; only factors of g can cancel
        numer = self.numer * d2 + other.numer * d1
        return ExactScalar(numer, d1 * other.denom)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar._raw(-self.numer, self.denom)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar, MultiPoly)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ExactScalar._raw(MultiPoly())
            return ExactScalar._raw(self.numer * other, self.denom)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.numer, self.denom
        c, d = other.numer, other.denom
        if a.is_zero() or c.is_zero():
            return ExactScalar._raw(MultiPoly())
        if b.is_one() and d.is_one():
            return ExactScalar._raw(a * c)
        if not d.is_one() and not a.is_constant():
            _, a, d = poly_gcd_cofactors(a, d)
        if not b.is_one() and not c.is_constant():
            _, c, b = poly_gcd_cofactors(c, b)
        numer, denom = a * c, b * d
        if denom.is_constant():
            return ExactScalar._raw(numer * (1 / denom.constant_value()))
        numer, denom = _make_monic(numer, denom)
        return ExactScalar._raw(numer, denom)

    __rmul__ = __mul__

    def inverse(self):
        if self.numer.is_zero():
            raise ZeroDivisionError("inverse of zero ExactScalar")
        if self.numer.is_constant():
            c = self.numer.constant_value()
            return ExactScalar._raw(self.denom * (1 / c))
        numer, denom = _make_monic(self.denom, self.numer)
        return ExactScalar._raw(numer, denom)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of ExactScalar by zero")
            return ExactScalar._raw(self.numer * (1 / Fraction(other)), self.denom)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if self.denom.is_one():
            return ExactScalar._raw(self.numer ** k)
        return ExactScalar._raw(self.numer ** k, self.denom ** k)

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return self.numer == other.numer and self.denom == other.denom
        if isinstance(other, (int, Fraction)):
            return self.denom.is_one() and self.numer == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.numer.constant_value())
            else:
                self._hash = hash((self.numer, self.denom))
        return self._hash

    # -- substitution -------------------------------------------------

    def evaluate(self, t=None, u=None, s=None) -> Fraction:
        """Exact value at rational ``(t, u, s)``; unused variables may be omitted."""
        den = self.denom.evaluate(t, u, s)
        if not den:
            raise ZeroDivisionError(f"denominator {self.denom} vanishes at t={t}, u={u}, s={s}")
        return Fraction(self.numer.evaluate(t, u, s)) / den

    def subs_inverse_s(self):
        """Return this value with ``s`` replaced by ``1/s``."""
        n_rev, a = self.numer.reverse_s()
        d_rev, b = self.denom.reverse_s()
        if a >= b:
            return ExactScalar(n_rev, d_rev.shift_s(a - b))
        return ExactScalar(n_rev.shift_s(b - a), d_rev)

    # -- serialization -----------------------------------------------

    def to_json(self):
        if self.is_rational():
            return format_rational(self.numer.constant_value())
        if self.denom.is_one():
            return {"numer": self.numer.to_json(), "denom": [{"e": [0, 0, 0], "c": "1"}]}
        return {"numer": self.numer.to_json(), "denom": self.denom.to_json()}

    @classmethod
    def from_json(cls, data):
        from ._poly import parse_rational

        if isinstance(data, (str, int)):
            return cls.from_rational(parse_rational(data))
        if isinstance(data, list):
            return cls(MultiPoly.from_json(data))
        if isinstance(data, dict) and "numer" in data:
            denom = MultiPoly.from_json(data.get("denom", [{"e": [0, 0, 0], "c": "1"}]))
            return cls(MultiPoly.from_json(data["numer"]), denom)
        raise ValueError(f"cannot parse ExactScalar from {data!r}")

    def __str__(self):
        if self.denom.is_one():
            return str(self.numer)
        num = str(self.numer)
        den = str(self.denom)
        if len(self.numer) > 1:
            num = f"({num})"
        if len(self.denom) > 1 or not self.denom.is_constant():
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"ExactScalar({self})"


def _as_poly(value):
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiPoly.constant(value)
    if isinstance(value, str):
        from ._poly import parse_rational

        return MultiPoly.constant(parse_rational(value))
    raise TypeError(f"cannot build a polynomial from {type(value).__name__}")


T = ExactScalar.from_poly(MultiPoly.variable("t"))
U = ExactScalar.from_poly(MultiPoly.variable("u"))
S = ExactScalar.from_poly(MultiPoly.variable("s"))
