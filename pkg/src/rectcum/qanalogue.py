"""q-deformation of the (t, u) moment/cumulant calculus.

Throughout, ``s`` stands for the square root of the deformation parameter,
so ``q = s^2`` and the second base ``q^{-1/2}`` is ``1/s``.  ``s`` may be the
symbol :data:`~rectcum.exactalg.S` or an exact rational (for pointwise
evaluation); ``t`` and ``u`` come from :class:`~rectcum.transforms.TUParams`.

The defining relations, with exp and composition taken in base ``1/s``::

    exp[ sum_l kappa_{2l} s^{2l-1} z^{2l} / [l]_q ]
        = 1 + sum_n a_{2n} (1-q)^{2n} s^{2n^2-3n} z^{2n} / ((t;q)_n (u;q)_n)
    exp[ (1-t)/(1-q) sum_k m_{2k} z^{2k} / [k]_q ] = 1 + sum_n a_{2n} z^{2n}
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import combin
from .errors import GuardError
from .exactalg import S, TruncatedSeries, q_factorial, q_number, q_pochhammer, series_mul
from .transforms import CoeffSeq, CumulantSeq, MomentSeq, TUParams, _as, _order

BASES = ("q", "q^-1/2")


def base_value(base, s=S):
    if base == "q":
        return s * s
    if base == "q^-1/2":
        return 1 / s
    raise ValueError(f"unknown base {base!r}; expected one of {BASES}")


@dataclass(frozen=True)
class QSeries:
    """A truncated series together with the base of its q-calculus."""

    series: TruncatedSeries
    base: str = "q"
    s: object = S

    def __post_init__(self):
        base_value(self.base, self.s)
        if isinstance(self.s, int):
            object.__setattr__(self, "s", Fraction(self.s))

    @classmethod
    def from_coeffs(cls, coeffs, base="q", s=S, order=None):
        coeffs = list(coeffs)
        order = len(coeffs) - 1 if order is None else order
        return cls(TruncatedSeries(order, coeffs), base, s)

    @property
    def b(self):
        return base_value(self.base, self.s)

    @property
    def order(self):
        return self.series.order

    def __getitem__(self, j):
        return self.series[j]

    def _same(self, series):
        return QSeries(series, self.base, self.s)

    def __add__(self, other):
        return self._same(self.series + _unwrap(other))

    def __sub__(self, other):
        return self._same(self.series - _unwrap(other))

    def __mul__(self, other):
        return self._same(self.series * _unwrap(other))

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.base == other.base and self.s == other.s and self.series == other.series

    __hash__ = None


def _unwrap(x):
    return x.series if isinstance(x, QSeries) else x


def _check_zero_constant(f: QSeries, what):
    if f.series[0]:
        raise ValueError(f"{what} needs f(0) = 0, got constant term {f.series[0]}")


# -- q-calculus on series ---------------------------------------------------


def q_derivative(f: QSeries) -> QSeries:
    """``D_b z^m = [m]_b z^{m-1}`` (constants go to 0)."""
    c = f.series.coeffs
    if f.order == 0:
        return f._same(TruncatedSeries(0, [0]))
    b = f.b
    out = [c[m] * q_number(m, b) if c[m] else 0 for m in range(1, f.order + 1)]
    return f._same(TruncatedSeries(f.order - 1, out))


def q_antiderivative(f: QSeries) -> QSeries:
    """``z^m -> z^{m+1} / [m+1]_b`` with zero constant of integration."""
    b = f.b
    out = [0] + [c / q_number(m + 1, b) if c else 0 for m, c in enumerate(f.series.coeffs)]
    return f._same(TruncatedSeries(f.order + 1, out))


def q_symbolic_power(f: QSeries, k: int) -> QSeries:
    """``f^{[k]}`` from ``D f^{[k]} = [k] f^{[k-1]} D f`` and ``f^{[k]}(0) = 0``."""
    if k < 0:
        raise ValueError("symbolic powers need k >= 0")
    _check_zero_constant(f, "q_symbolic_power")
    return _symbolic_powers(f, k)[k]


def _symbolic_powers(f: QSeries, kmax):
    N = f.order
    b = f.b
    Df = q_derivative(f).series
    powers = [f._same(TruncatedSeries.one(N))]
    for k in range(1, kmax + 1):
        prod = series_mul(powers[-1].series, Df) * q_number(k, b)
        nxt = q_antiderivative(f._same(prod)).series
        powers.append(f._same(nxt.truncate(N)))
    return powers


def q_symbolic_power_sum(f: QSeries, k: int) -> QSeries:
    """Same as :func:`q_symbolic_power`, via the infinite sum over dilations.

    On a monomial ``c x^j`` of ``f^{[k-1]} D f`` the sum is geometric:
    ``x (1-b^k) sum_n b^n c (b^n x)^j = c (1-b^k) x^{j+1} / (1-b^{j+1})``.
    """
    _check_zero_constant(f, "q_symbolic_power_sum")
    N = f.order
    b = f.b
    Df = q_derivative(f).series
    cur = TruncatedSeries.one(N)
    for kk in range(1, k + 1):
        prod = series_mul(cur, Df)
        out = [0] * (N + 1)
        for j, c in enumerate(prod.coeffs):
            if c and j + 1 <= N:
                out[j + 1] = c * (1 - b ** kk) / (1 - b ** (j + 1))
        cur = TruncatedSeries(N, out)
    return f._same(cur)


def q_composition(g: QSeries, f: QSeries) -> QSeries:
    """``g[f] = sum_n g_n f^{[n]} / n!_b`` where ``g = sum_n g_n x^n / n!_b``."""
    if g.base != f.base or g.s != f.s:
        raise ValueError("q_composition needs both series in the same base")
    _check_zero_constant(f, "q_composition")
    N = min(f.order, g.order)
    f = f._same(f.series.truncate(N))
    powers = _symbolic_powers(f, N)
    total = TruncatedSeries(N, [0] * (N + 1))
    for n in range(N + 1):
        c = g.series[n]
        if c:
            # g_n / n!_b is the plain coefficient c
            total = total + powers[n].series * c
    return f._same(total)


def q_exp(order, base="q", s=S) -> QSeries:
    """``exp_b(x) = sum_n x^n / n!_b``."""
    b = base_value(base, s)
    return QSeries(TruncatedSeries(order, [1 / q_factorial(n, b) for n in range(order + 1)]), base, s)


def q_exp_composition(f: QSeries) -> QSeries:
    """``exp_b[f] = sum_n f^{[n]} / n!_b``."""
    _check_zero_constant(f, "q_exp_composition")
    b = f.b
    total = TruncatedSeries(f.order, [0] * (f.order + 1))
    for n, pw in enumerate(_symbolic_powers(f, f.order)):
        total = total + pw.series * (1 / q_factorial(n, b))
    return f._same(total)


# -- moment/cumulant transitions ------------------------------------------


def _check_s(s):
    if isinstance(s, Fraction) and (s == 0 or s * s == 1):
        raise ZeroDivisionError(f"q = s^2 must differ from 0 and 1, got s = {s}")


def _s_power(s, e):
    return s ** e if e >= 0 else (1 / s) ** (-e)


def q_coeffs_from_cumulants(kappa, p: TUParams, K=None, s=S) -> CoeffSeq:
    """Coefficients ``a_{2n}`` by composition in base ``q^{-1/2}``."""
    kappa = _as(CumulantSeq, kappa)
    K = _order(kappa, K)
    _check_s(s)
    q = s * s
    G = [0] * (2 * K + 1)
    for l, k in enumerate(kappa.kappa[:K], start=1):
        G[2 * l] = k * _s_power(s, 2 * l - 1) / q_number(l, q)
    E = q_exp_composition(QSeries(TruncatedSeries(2 * K, G), "q^-1/2", s))
    out = []
    for n in range(1, K + 1):
        pre = q_pochhammer(p.t, n, q) * q_pochhammer(p.u, n, q)
        pre = pre / ((1 - q) ** (2 * n) * _s_power(s, 2 * n * n - 3 * n))
        out.append(E[2 * n] * pre if E[2 * n] else Fraction(0))
    return CoeffSeq(tuple(out))


def q_coeffs_from_moments(m, p: TUParams, K=None, s=S) -> CoeffSeq:
    """Coefficients from moments by composition in base ``q^{-1/2}``."""
    m = _as(MomentSeq, m)
    K = _order(m, K)
    _check_s(s)
    q = s * s
    lead = (1 - p.t) / (1 - q)
    F = [0] * (2 * K + 1)
    for k, mk in enumerate(m.m[:K], start=1):
        F[2 * k] = mk * lead / q_number(k, q)
    E = q_exp_composition(QSeries(TruncatedSeries(2 * K, F), "q^-1/2", s))
    return CoeffSeq(tuple(E[2 * n] if E[2 * n] else Fraction(0) for n in range(1, K + 1)))


def q_moments_from_coeffs(a, p: TUParams, K=None, s=S) -> MomentSeq:
    """Solve ``[n]_q a_{2n} = (1-t)/(1-q) (m_{2n} + sum_{l<n} q^{n-l} m_{2l} a_{2n-2l})``."""
    a = _as(CoeffSeq, a)
    K = _order(a, K)
    _check_s(s)
    if not (1 - p.t):
        raise ZeroDivisionError("t = 1 makes the moment recursion singular")
    q = s * s
    factor = (1 - q) / (1 - p.t)
    av = a.a[:K]
    m = []
    for n in range(1, K + 1):
        acc = av[n - 1] * (q_number(n, q) * factor)
        for l in range(1, n):
            acc = acc - m[l - 1] * av[n - l - 1] * q ** (n - l)
        m.append(acc)
    return MomentSeq(tuple(m))


def _q_operator_step(f, g, p, s, keep):
    """``(q Delta T + s g* T) f`` keeping degrees <= keep."""
    q = s * s
    n = f.order
    Tf = [c * _s_power(s, -j) if c else 0 for j, c in enumerate(f.coeffs)]
    out = [0] * (n + 1)
    for j in range(1, min(n, keep + 1) + 1):
        c = Tf[j]
        if c:
            half = j // 2
            num = (1 - p.u * q ** half) if j % 2 else (1 - p.t * q ** half)
            out[j - 1] = c * (q * num / (1 - q))
    gnz = [(i, c * s) for i, c in enumerate(g) if c]
    for j, c in enumerate(Tf):
        if not c:
            continue
        for i, gc in gnz:
            if i + j > keep:
                break
            out[i + j] = out[i + j] + c * gc
    return TruncatedSeries(n, out)


def q_moments_operator(kappa, p: TUParams, K=None, s=S) -> MomentSeq:
    """``m_{2k} = s [z^0] (q Delta T + s g* T)^{2k-1} g`` with ``T z^m = s^{-m} z^m``."""
    kappa = _as(CumulantSeq, kappa)
    K = _order(kappa, K)
    _check_s(s)
    work = 4 * K
    g = [0] * (work + 1)
    for l, k in enumerate(kappa.kappa[:K], start=1):
        g[2 * l - 1] = k
    f = TruncatedSeries(work, g)
    steps = 2 * K - 1
    out = []
    for j in range(1, steps + 1):
        keep = steps - j
        assert keep <= work, "working order too small"
        f = _q_operator_step(f, g, p, s, keep)
        if j % 2 == 1:
            c = f.coeffs[0]
            out.append(c * s if c else Fraction(0))
    return MomentSeq(tuple(out))


@lru_cache(maxsize=None)
def _path_data(n2):
    out = []
    for path in combin.enumerate_luk_odd(n2):
        st = combin.path_stats(path)
        out.append((st, 2 * st.down_steps + st.up_steps - st.height_sum))
    return tuple(out)


def q_path_weight(path_or_stats, p: TUParams, kappa, s=S):
    """Weight of one odd path; ``kappa[l-1]`` is kappa_{2l}."""
    st = path_or_stats
    if isinstance(st, combin.LukPath):
        st = combin.path_stats(st)
    q = s * s
    w = _s_power(s, 2 * st.down_steps + st.up_steps - st.height_sum)
    for h, c in st.down_from_height.items():
        half, odd = divmod(h, 2)
        num = (1 - p.u * q ** half) if odd else (1 - p.t * q ** half)
        w = w * (num / (1 - q)) ** c
    for r, c in st.up_count_by_rise.items():
        w = w * kappa[(r + 1) // 2 - 1] ** c
    return w


def q_moments_paths(kappa, p: TUParams, K=None, s=S) -> MomentSeq:
    kappa = _as(CumulantSeq, kappa)
    K = _order(kappa, K)
    if K > combin.MAX_PATH_HALF_LENGTH:
        raise GuardError(f"path route supports K <= {combin.MAX_PATH_HALF_LENGTH}")
    _check_s(s)
    ks = kappa.kappa[:K]
    out = []
    for k in range(1, K + 1):
        total = 0
        for st, _ in _path_data(2 * k):
            # skip paths using a zero cumulant without building the weight
            if any(not ks[(r + 1) // 2 - 1] for r in st.up_count_by_rise):
                continue
            total = total + q_path_weight(st, p, ks, s)
        out.append(total if not isinstance(total, int) else Fraction(total))
    return MomentSeq(tuple(out))


def q_moments_series(kappa, p: TUParams, K=None, s=S) -> MomentSeq:
    """Recursion route: cumulants -> coefficients -> moments."""
    return q_moments_from_coeffs(q_coeffs_from_cumulants(kappa, p, K, s), p, K, s)


__all__ = [
    "BASES",
    "QSeries",
    "base_value",
    "q_derivative",
    "q_antiderivative",
    "q_symbolic_power",
    "q_symbolic_power_sum",
    "q_composition",
    "q_exp",
    "q_exp_composition",
    "q_coeffs_from_cumulants",
    "q_coeffs_from_moments",
    "q_moments_from_coeffs",
    "q_moments_operator",
    "q_moments_paths",
    "q_moments_series",
    "q_path_weight",
]
