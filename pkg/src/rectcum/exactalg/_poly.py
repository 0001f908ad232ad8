"""Sparse polynomials in the three parameters ``t``, ``u``, ``s`` over Q."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

VARIABLES = ("t", "u", "s")
NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * NVARS


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` (or an int/Fraction) into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string like 'p/q', got {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational {text!r}") from exc


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def grlex_key(exp):
    return (sum(exp), exp)


@lru_cache(maxsize=None)
def _sympy_ring():
    from sympy.polys.domains import ZZ
    from sympy.polys.rings import ring

    return ring(",".join(VARIABLES), ZZ)[0]


class MultiPoly:
    """Polynomial in ``t, u, s`` stored as ``{(e_t, e_u, e_s): Fraction}``.

    Zero coefficients are never stored.  Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, coeff in dict(terms).items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != NVARS or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent vector {exp!r}")
                coeff = parse_rational(coeff) if isinstance(coeff, str) else Fraction(coeff)
                if coeff:
                    clean[exp] = clean.get(exp, 0) + coeff
                    if not clean[exp]:
                        del clean[exp]
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value):
        value = Fraction(value)
        return cls._wrap({_ZERO_EXP: value} if value else {})

    @classmethod
    def variable(cls, name):
        idx = VARIABLES.index(name)
        exp = tuple(1 if i == idx else 0 for i in range(NVARS))
        return cls._wrap({exp: Fraction(1)})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return not self._terms or (len(self._terms) == 1 and _ZERO_EXP in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get(_ZERO_EXP, Fraction(0))

    def is_one(self):
        return len(self._terms) == 1 and self._terms.get(_ZERO_EXP) == 1

    def total_degree(self):
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, name):
        idx = VARIABLES.index(name)
        return max((e[idx] for e in self._terms), default=-1)

    def leading_term(self):
        exp = max(self._terms, key=grlex_key)
        return exp, self._terms[exp]

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for exp, c in small.items():
            v = out.get(exp)
            if v is None:
                out[exp] = c
            else:
                v += c
                if v:
                    out[exp] = v
                else:
                    del out[exp]
        return MultiPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly._wrap({})
            return MultiPoly._wrap({e: c * other for e, c in self._terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out = {}
        get = out.get
        for (b0, b1, b2), cb in b.items():
            for (a0, a1, a2), ca in a.items():
                exp = (a0 + b0, a1 + b1, a2 + b2)
                out[exp] = get(exp, 0) + ca * cb
        return MultiPoly._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("MultiPoly powers must be nonnegative integers")
        result = MultiPoly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, factor):
        return self * Fraction(factor)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- evaluation / substitution ---------------------------------------

    def evaluate(self, t=None, u=None, s=None):
        """Substitute values for the variables.

        Any argument left as ``None`` keeps that variable symbolic only if
        the polynomial does not depend on it; otherwise ``ValueError``.
        """
        values = (t, u, s)
        for idx, val in enumerate(values):
            if val is None and self.degree_in(VARIABLES[idx]) > 0:
                raise ValueError(f"no value supplied for {VARIABLES[idx]}")
        powers = [{} for _ in range(NVARS)]
        total = Fraction(0)
        for exp, c in self._terms.items():
            term = c
            for idx, e in enumerate(exp):
                if e:
                    cache = powers[idx]
                    p = cache.get(e)
                    if p is None:
                        p = cache[e] = values[idx] ** e
                    term = term * p
            total = total + term
        return total

    def reverse_s(self):
        """Return ``(P, k)`` with ``self(t, u, 1/s) = P(t, u, s) / s**k``."""
        k = max((e[2] for e in self._terms), default=0)
        return MultiPoly._wrap({(e[0], e[1], k - e[2]): c for e, c in self._terms.items()}), k

    def shift_s(self, k):
        """Multiply by ``s**k`` (k >= 0)."""
        return MultiPoly._wrap({(e[0], e[1], e[2] + k): c for e, c in self._terms.items()})

    # -- integer/content helpers used by the gcd ------------------------

    def primitive(self):
        """Return ``(content, int_terms)`` with ``self = content * int_terms``.

        ``int_terms`` has coprime integer coefficients and a positive
        leading coefficient.
        """
        if not self._terms:
            return Fraction(0), {}
        den = 1
        for c in self._terms.values():
            den = math.lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self._terms.items()}
        g = 0
        for v in ints.values():
            g = math.gcd(g, v)
        lead = ints[max(ints, key=grlex_key)]
        if lead < 0:
            g = -g
        return Fraction(g, den), {e: v // g for e, v in ints.items()}

    def to_sympy(self):
        R = _sympy_ring()
        content, ints = self.primitive()
        return content, R.from_dict(ints)

    @classmethod
    def from_int_dict(cls, terms, scale=1):
        scale = Fraction(scale)
        return cls._wrap({tuple(e): Fraction(int(c)) * scale for e, c in terms.items() if c})

    # -- (de)serialization ----------------------------------------------

    def to_json(self):
        return [{"e": list(e), "c": format_rational(c)} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data):
        if not isinstance(data, list):
            raise ValueError("MultiPoly JSON must be a list of {'e': [...], 'c': 'p/q'}")
        terms = {}
        for item in data:
            try:
                exp = tuple(item["e"])
                coeff = parse_rational(item["c"])
            except (KeyError, TypeError) as exc:
                raise ValueError(f"bad MultiPoly term {item!r}") from exc
            terms[exp] = terms.get(exp, 0) + coeff
        return cls(terms)

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            factors = []
            for name, e in zip(VARIABLES, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = format_rational(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = format_rational(mag) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self})"


def poly_gcd_cofactors(a: MultiPoly, b: MultiPoly):
    """Return ``(g, a/g, b/g)`` for nonzero polynomials.

    ``g`` is primitive over Z; the cofactors absorb all rational content.
    """
    ca, pa = a.to_sympy()
    cb, pb = b.to_sympy()
    g, fa, fb = pa.cofactors(pb)
    return (
        MultiPoly.from_int_dict(dict(g.items())),
        MultiPoly.from_int_dict(dict(fa.items()), ca),
        MultiPoly.from_int_dict(dict(fb.items()), cb),
    )
