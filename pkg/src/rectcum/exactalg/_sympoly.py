"""Laurent polynomials in named symbols with exact coefficients.

Used for generic sequences (``k2, k4, ...``, ``m2, ...``) and for a symbolic
``q`` in the q-rectangular calculus.  Coefficients may be any exact ring
element: ``int``, ``Fraction`` or ``ExactScalar``.
"""
from __future__ import annotations

from fractions import Fraction

from ._scalar import ExactScalar

_SCALARS = (int, Fraction, ExactScalar)


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for name, e in b:
        v = out.get(name, 0) + e
        if v:
            out[name] = v
        else:
            del out[name]
    return tuple(sorted(out.items()))


def _symbol_key(name):
    # k2 < k4 < k10: split trailing digits for a natural order
    head = name.rstrip("0123456789")
    tail = name[len(head):]
    return (head, int(tail) if tail else -1)


class SymPoly:
    """Immutable mapping ``monomial -> coefficient``.

    A monomial is a sorted tuple of ``(symbol, exponent)`` pairs; negative
    exponents are allowed.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(sorted((n, e) for n, e in mono if e))
            if c:
                v = clean.get(mono, 0) + c
                if v:
                    clean[mono] = v
                else:
                    clean.pop(mono, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def symbol(cls, name, exponent=1):
        return cls._wrap({((name, exponent),): Fraction(1)})

    @classmethod
    def constant(cls, value):
        return cls._wrap({(): value} if value else {})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, monomial):
        """Coefficient of ``monomial`` given as a dict or pair sequence."""
        if isinstance(monomial, dict):
            monomial = monomial.items()
        key = tuple(sorted((n, e) for n, e in monomial if e))
        return self._terms.get(key, 0)

    def symbols(self):
        return sorted({n for mono in self._terms for n, _ in mono}, key=_symbol_key)

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self):
        return self._terms.get((), 0)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return self
            out = dict(self._terms)
            v = out.get((), 0) + other
            if v:
                out[()] = v
            else:
                out.pop((), None)
            return SymPoly._wrap(out)
        if not isinstance(other, SymPoly):
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for mono, c in b.items():
            v = out.get(mono)
            if v is None:
                out[mono] = c
            else:
                v = v + c
                if v:
                    out[mono] = v
                else:
                    del out[mono]
        return SymPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (SymPoly,) + _SCALARS):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _SCALARS):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            if not other:
                return SymPoly._wrap({})
            out = {}
            for m, c in self._terms.items():
                v = c * other
                if v:
                    out[m] = v
            return SymPoly._wrap(out)
        if not isinstance(other, SymPoly):
            return NotImplemented
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m)
                out[m] = c1 * c2 if v is None else v + c1 * c2
        return SymPoly._wrap({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, (Fraction, ExactScalar)):
            if not other:
                raise ZeroDivisionError("SymPoly divided by zero")
            return self * (1 / other)
        if isinstance(other, SymPoly) and len(other._terms) == 1:
            ((mono, c),) = other._terms.items()
            inv_mono = tuple((n, -e) for n, e in mono)
            return self * SymPoly._wrap({inv_mono: 1 / (Fraction(c) if isinstance(c, int) else c)})
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only for monomials")
            return (SymPoly.constant(Fraction(1)) / self) ** (-k)
        result = SymPoly.constant(Fraction(1))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SymPoly):
            return self._terms == other._terms
        if isinstance(other, _SCALARS):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution -------------------------------------------------

    def map_coeffs(self, fn):
        out = {}
        for m, c in self._terms.items():
            v = fn(c)
            if v:
                out[m] = v
        return SymPoly._wrap(out)

    def subs(self, values):
        """Substitute ``{symbol: value}``; returns a scalar when nothing is left."""
        total = 0
        for mono, c in self._terms.items():
            rest = []
            term = c
            for name, e in mono:
                if name in values:
                    v = values[name]
                    term = term * (v ** e if e > 0 else (1 / _as_field(v)) ** (-e))
                else:
                    rest.append((name, e))
            if rest:
                term = SymPoly._wrap({tuple(rest): Fraction(1)}) * term
            total = total + term
        return total

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono, c in sorted(self._terms.items(), key=lambda kv: _mono_sort_key(kv[0])):
            body = "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            cs = str(c)
            if not body:
                parts.append(cs)
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                if isinstance(c, ExactScalar) and not c.is_rational():
                    cs = f"({cs})"
                parts.append(f"{cs}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"SymPoly({self})"


def _as_field(v):
    return Fraction(v) if isinstance(v, int) else v


def _mono_sort_key(mono):
    deg = sum(e for _, e in mono)
    return (-deg, [(_symbol_key(n), -e) for n, e in mono])


def symbols(*names):
    return tuple(SymPoly.symbol(n) for n in names)
