"""Truncated formal power series in ``z`` with exact coefficients."""
from __future__ import annotations

from fractions import Fraction

from ..errors import SeriesDomainError


class TruncatedSeries:
    """``sum_{j <= order} coeffs[j] z^j`` with coefficients in any exact ring.

    Binary operations truncate to the smaller order.  The zero coefficient
    is stored as the integer ``0``.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        if order < 0:
            raise ValueError("series order must be nonnegative")
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            if any(coeffs[order + 1:]):
                raise ValueError(
                    f"{len(coeffs)} coefficients supplied for a series of order {order}"
                )
            coeffs = coeffs[: order + 1]
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, order, j, c=1):
        coeffs = [0] * (order + 1)
        if j <= order:
            coeffs[j] = c
        return cls(order, coeffs)

    @classmethod
    def one(cls, order):
        return cls.monomial(order, 0, 1)

    def __getitem__(self, j):
        return self.coeffs[j]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order):
        return TruncatedSeries(min(order, self.order), self.coeffs[: order + 1])

    # -- arithmetic ---------------------------------------------------

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.monomial(self.order, 0, other)

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        return TruncatedSeries(n, [self.coeffs[j] + other.coeffs[j] for j in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(self.order, [c * other for c in self.coeffs])
        return series_mul(self, other)

    def __rmul__(self, other):
        return TruncatedSeries(self.order, [other * c for c in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def map(self, fn):
        return TruncatedSeries(self.order, [fn(c) if c else 0 for c in self.coeffs])

    def scale_z(self, factor):
        """Substitute ``z -> factor * z``."""
        out, p = [], 1
        for c in self.coeffs:
            out.append(c * p if c else 0)
            p = p * factor
        return TruncatedSeries(self.order, out)

    def __repr__(self):
        terms = [f"({c})*z^{j}" for j, c in enumerate(self.coeffs) if c]
        return f"TruncatedSeries(order={self.order}: {' + '.join(terms) or '0'})"


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    out = [0] * (n + 1)
    nz_b = [(j, c) for j, c in enumerate(b[: n + 1]) if c]
    for i in range(n + 1):
        ai = a[i]
        if not ai:
            continue
        for j, bj in nz_b:
            if i + j > n:
                break
            out[i + j] = out[i + j] + ai * bj
    return TruncatedSeries(n, out)


def series_derivative(f: TruncatedSeries) -> TruncatedSeries:
    """d/dz; the result has order ``f.order - 1`` (order 0 stays order 0)."""
    if f.order == 0:
        return TruncatedSeries(0, [0])
    return TruncatedSeries(f.order - 1, [j * f.coeffs[j] for j in range(1, f.order + 1)])


def constant_term(f: TruncatedSeries):
    return f.coeffs[0]


def coefficient_at(f: TruncatedSeries, j: int):
    if j < 0 or j > f.order:
        raise IndexError(f"coefficient z^{j} requested from a series of order {f.order}")
    return f.coeffs[j]


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """``exp(f)`` for ``f(0) = 0`` via ``n g_n = sum_k k f_k g_{n-k}``."""
    if f.coeffs[0]:
        raise SeriesDomainError(f"series_exp needs constant term 0, got {f.coeffs[0]}")
    n = f.order
    nz = [(k, k * c) for k, c in enumerate(f.coeffs) if c and k]
    g = [0] * (n + 1)
    g[0] = Fraction(1)
    for m in range(1, n + 1):
        acc = 0
        for k, kf in nz:
            if k > m:
                break
            if g[m - k]:
                acc = acc + kf * g[m - k]
        g[m] = acc * Fraction(1, m) if acc else 0
    return TruncatedSeries(n, g)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """``log(f)`` for ``f(0) = 1`` via ``n g_n = n f_n - sum_{k<n} k g_k f_{n-k}``."""
    if f.coeffs[0] != 1:
        raise SeriesDomainError(f"series_log needs constant term 1, got {f.coeffs[0]}")
    n = f.order
    a = f.coeffs
    g = [0] * (n + 1)
    for m in range(1, n + 1):
        acc = m * a[m] if a[m] else 0
        for k in range(1, m):
            if g[k] and a[m - k]:
                acc = acc - k * g[k] * a[m - k]
        g[m] = acc * Fraction(1, m) if acc else 0
    return TruncatedSeries(n, g)
