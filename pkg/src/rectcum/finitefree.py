"""Monic polynomials, finite free convolutions and their cumulants.

A degree-d :class:`MonicPoly` stores ``coeffs[i-1] = a_{2i}``, the
coefficient of ``x^{d-i}`` in ``x^d + sum_i a_{2i} x^{d-i}``.  The signed
view ``a_i = (-1)^i a_{2i}`` serves the symmetric additive convolution.

The rectangular operator ``x^{-n} D x^{n+1} D`` acts on monomials by
``x^i -> i (i + n) x^{i-1}``; its powers have the closed form
``(-i)_k (-i-n)_k x^{i-k}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exactalg import TruncatedSeries, parse_rational, format_rational, pochhammer, series_exp, series_log
from .transforms import MomentSeq, TUParams, moments_from_coeffs


@dataclass(frozen=True)
class MonicPoly:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(Fraction(c) if not isinstance(c, str) else parse_rational(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("a MonicPoly needs degree >= 1")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self):
        return len(self.coeffs)

    @classmethod
    def monomial(cls, d):
        """``x^d``."""
        return cls((Fraction(0),) * d)

    @classmethod
    def from_roots(cls, roots):
        full = [Fraction(1)]
        for r in roots:
            r = Fraction(r)
            nxt = full + [Fraction(0)]
            for i in range(1, len(nxt)):
                nxt[i] -= r * full[i - 1]
            full = nxt
        return cls(tuple(full[1:]))

    @classmethod
    def from_signed(cls, signed):
        return cls(tuple((-1) ** i * Fraction(a) for i, a in enumerate(signed, start=1)))

    @classmethod
    def from_ascending(cls, coeffs):
        """From ``[c_0, c_1, ..., c_d]`` with ``c_d = 1``."""
        coeffs = [Fraction(c) for c in coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if coeffs[-1] != 1:
            raise ValueError(f"polynomial is not monic (leading coefficient {coeffs[-1]})")
        return cls(tuple(reversed(coeffs[:-1])))

    @property
    def signed(self):
        return tuple((-1) ** i * a for i, a in enumerate(self.coeffs, start=1))

    def full(self):
        """``(1, a_2, a_4, ..., a_{2d})`` in descending powers."""
        return (Fraction(1),) + self.coeffs

    def ascending(self):
        return list(reversed(self.full()))

    def __call__(self, x):
        acc = 0
        for c in self.full():
            acc = acc * x + c
        return acc

    def to_json(self):
        return {"degree": self.degree, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        try:
            d = int(data["degree"])
            coeffs = data["coeffs"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError("polynomial JSON needs 'degree' and 'coeffs'") from exc
        if len(coeffs) != d:
            raise ValueError(f"'coeffs' has {len(coeffs)} entries but 'degree' is {d}")
        return cls(tuple(parse_rational(c) for c in coeffs))

    def __str__(self):
        d = self.degree
        parts = [f"x^{d}" if d > 1 else "x"]
        for i, c in enumerate(self.coeffs, start=1):
            if not c:
                continue
            power = d - i
            mono = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
            mag = format_rational(abs(c))
            body = mag if not mono else (mono if abs(c) == 1 else f"{mag}*{mono}")
            parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


@dataclass(frozen=True)
class RectParams:
    n: int
    d: int

    def __post_init__(self):
        if self.n < 0 or self.d < 1:
            raise ValueError(f"need n >= 0 and d >= 1, got n={self.n}, d={self.d}")


def _resolve_n(n, d):
    if isinstance(n, RectParams):
        if n.d != d:
            raise ValueError(f"RectParams.d = {n.d} but the polynomial has degree {d}")
        return n.n
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    return n


def _same_degree(p, r):
    if p.degree != r.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {r.degree}")
    return p.degree


# -- convolutions ---------------------------------------------------------


def _falling_ratio(d, i):
    """``(d - i)! / d!``."""
    return Fraction(factorial(d - i), factorial(d))


def _conv(A, B, d, weights, upto):
    out = []
    for k in range(1, upto + 1):
        acc = Fraction(0)
        for i in range(k + 1):
            a, b = A[i], B[k - i]
            if a and b:
                acc += weights(i, k - i, k) * a * b
        out.append(acc)
    return out


def symmetric_additive_convolution(p: MonicPoly, r: MonicPoly) -> MonicPoly:
    d = _same_degree(p, r)
    fr = [_falling_ratio(d, i) for i in range(d + 1)]

    def w(i, j, k):
        return fr[i] * fr[j] / fr[k]

    A = (Fraction(1),) + p.signed
    B = (Fraction(1),) + r.signed
    return MonicPoly.from_signed(_conv(A, B, d, w, d))


def rect_conv_coeffs(p: MonicPoly, r: MonicPoly, n, upto=None):
    """First ``upto`` coefficients ``a_2, a_4, ...`` of the rectangular convolution."""
    d = _same_degree(p, r)
    n = _resolve_n(n, d)
    upto = d if upto is None else min(upto, d)
    fr = [_falling_ratio(d, i) for i in range(upto + 1)]
    gr = [_falling_ratio(n + d, i) for i in range(upto + 1)]

    def w(i, j, k):
        return fr[i] * fr[j] * gr[i] * gr[j] / (fr[k] * gr[k])

    return _conv(p.full(), r.full(), d, w, upto)


def rectangular_convolution(p: MonicPoly, r: MonicPoly, n) -> MonicPoly:
    return MonicPoly(tuple(rect_conv_coeffs(p, r, n)))


# -- cumulants ------------------------------------------------------------


def _log_coeffs(values, upto):
    """``[w^l] log(1 + sum_i values[i-1] w^i)`` times ``l`` for ``l <= upto``."""
    L = series_log(TruncatedSeries(upto, [Fraction(1)] + list(values[:upto])))
    return [Fraction(L[l]) * l for l in range(1, upto + 1)]


def finite_free_cumulants(p: MonicPoly, upto=None):
    """``K_l = l [z^l] log(1 + sum_i a_i z^i / (-d)_i)`` in the signed convention."""
    d = p.degree
    upto = d if upto is None else min(upto, d)
    vals = [a / pochhammer(Fraction(-d), i) for i, a in enumerate(p.signed[:upto], start=1)]
    return _log_coeffs(vals, upto)


def _rect_denoms(d, n, upto):
    out, x = [], Fraction(1)
    for i in range(1, upto + 1):
        x *= (-d + i - 1) * (-d - n + i - 1)
        out.append(x)
    return out


def rect_cumulants(p: MonicPoly, n, upto=None):
    """``K_{2l} = l [z^{2l}] log(1 + sum_i a_{2i} z^{2i} / ((-d)_i (-d-n)_i))``, l = 1..d."""
    d = p.degree
    n = _resolve_n(n, d)
    upto = d if upto is None else min(upto, d)
    den = _rect_denoms(d, n, upto)
    vals = [a / q for a, q in zip(p.coeffs[:upto], den)]
    return _log_coeffs(vals, upto)


def poly_from_rect_cumulants(K, n, d) -> MonicPoly:
    """Inverse of :func:`rect_cumulants`; entries past ``d`` are ignored and
    missing entries count as zero."""
    n = _resolve_n(n, d)
    K = [Fraction(x) for x in list(K)[:d]] + [Fraction(0)] * max(0, d - len(K))
    E = series_exp(TruncatedSeries(d, [0] + [k / l for l, k in enumerate(K, start=1)]))
    den = _rect_denoms(d, n, d)
    return MonicPoly(tuple(Fraction(E[i]) * den[i - 1] for i in range(1, d + 1)))


def r_nd(n, d, s2) -> MonicPoly:
    """``sum_k (-s^2)^k (-d)_k (-d-n)_k / (n^k k!) x^{d-k}``; takes ``s2 = s^2``."""
    if n < 1:
        raise ValueError("r_nd needs n >= 1")
    s2 = Fraction(s2)
    den = _rect_denoms(d, n, d)
    return MonicPoly(tuple((-s2) ** k * den[k - 1] / (n ** k * factorial(k)) for k in range(1, d + 1)))


def empirical_symmetric_moments(p: MonicPoly, K) -> MomentSeq:
    """Even moments of the symmetrized root distribution of ``p(x^2)``.

    Uses ``exp(-d sum_k m_{2k} z^{2k} / k) = 1 + sum_j a_{2j} z^{2j}``;
    no roots are computed.
    """
    d = p.degree
    a = list(p.coeffs[:K]) + [Fraction(0)] * max(0, K - d)
    return moments_from_coeffs(a, TUParams(Fraction(-d), Fraction(0)))


# -- the rectangular operator -------------------------------------------


def _ascending(p):
    if isinstance(p, MonicPoly):
        return p.ascending()
    return [Fraction(c) for c in p]


def rect_diff_operator(p, n, k):
    """``(x^{-n} D x^{n+1} D)^k`` applied to ``p``; ascending coefficients.

    ``p`` is a :class:`MonicPoly` or an ascending coefficient list.
    """
    c = _ascending(p)
    d = len(c) - 1
    if k < 0 or k > max(d, 0):
        raise ValueError(f"operator power k={k} exceeds degree {d}")
    out = [Fraction(0)] * (d - k + 1)
    for i in range(k, d + 1):
        if c[i]:
            out[i - k] = c[i] * pochhammer(Fraction(-i), k) * pochhammer(Fraction(-i - n), k)
    return out


def rect_diff_once(c, n):
    """One application, ``x^i -> i (i + n) x^{i-1}``."""
    return [Fraction(i * (i + n)) * c[i] for i in range(1, len(c))] or [Fraction(0)]


def apply_operator_polynomial(P, r, n):
    """``sum_k P[k] (x^{-n} D x^{n+1} D)^k r`` for ascending ``P``; ascending result."""
    c = _ascending(r)
    d = len(c) - 1
    out = [Fraction(0)] * (d + 1)
    for k, pk in enumerate(P):
        if not pk or k > d:
            continue
        for i, v in enumerate(rect_diff_operator(c, n, k)):
            out[i] += pk * v
    return out


def operator_polynomial(p: MonicPoly, n):
    """Ascending coefficients of ``P(x) = sum_k a_{2k} x^k / ((-d)_k (-d-n)_k)``."""
    d = p.degree
    den = _rect_denoms(d, n, d)
    return [Fraction(1)] + [a / q for a, q in zip(p.coeffs, den)]


def _heat_coefficients(p: MonicPoly, n, s2, upto):
    """Leading ``upto`` coefficients of ``exp(-(s^2/n) op) p`` via the closed form."""
    d = p.degree
    full = p.full()  # full[j] multiplies x^{d-j}
    out = []
    for j in range(1, upto + 1):
        acc = Fraction(0)
        for k in range(0, j + 1):
            a = full[j - k]
            if not a:
                continue
            i = d - j + k
            w = pochhammer(Fraction(-i), k) * pochhammer(Fraction(-i - n), k)
            acc += (-s2) ** k / (n ** k * factorial(k)) * w * a
        out.append(acc)
    return out


def exp_rect_operator(p: MonicPoly, n, s, upto=None, check=True) -> MonicPoly:
    """``exp(-(s^2/n) x^{-n} D x^{n+1} D) p`` as a finite sum.

    With ``check`` the closed form is compared against repeated single
    applications of the operator.  ``upto`` keeps only the leading
    coefficients (the rest are set to zero) for large-degree experiments.
    """
    d = p.degree
    n = _resolve_n(n, d)
    if n == 0:
        raise ValueError("exp_rect_operator needs n >= 1")
    s2 = Fraction(s) ** 2
    if upto is not None and upto < d:
        head = _heat_coefficients(p, n, s2, upto)
        return MonicPoly(tuple(head) + (Fraction(0),) * (d - upto))
    closed = [Fraction(0)] * (d + 1)
    c = p.ascending()
    for k in range(d + 1):
        scale = (-s2) ** k / (n ** k * factorial(k))
        for i, v in enumerate(rect_diff_operator(c, n, k)):
            closed[i] += scale * v
    if check:
        iterated = [Fraction(0)] * (d + 1)
        cur = c
        for k in range(d + 1):
            scale = (-s2) ** k / (n ** k * factorial(k))
            for i, v in enumerate(cur):
                iterated[i] += scale * v
            cur = rect_diff_once(cur, n)
        if iterated != closed:
            raise AssertionError("closed-form and iterated operator sums disagree")
    return MonicPoly.from_ascending(closed)


__all__ = [
    "MonicPoly",
    "RectParams",
    "symmetric_additive_convolution",
    "rectangular_convolution",
    "rect_conv_coeffs",
    "finite_free_cumulants",
    "rect_cumulants",
    "poly_from_rect_cumulants",
    "r_nd",
    "empirical_symmetric_moments",
    "rect_diff_operator",
    "rect_diff_once",
    "apply_operator_polynomial",
    "operator_polynomial",
    "exp_rect_operator",
]
