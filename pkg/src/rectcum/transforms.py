"""Generic (t, u) transitions between moments, cumulants and coefficients.

The three sequences are linked by

    exp( sum_l kappa_{2l} z^{2l} / l ) = 1 + sum_n a_{2n} z^{2n} / ((t)_n (u)_n)
    exp( t sum_k m_{2k} z^{2k} / k )   = 1 + sum_n a_{2n} z^{2n}

Moments can be obtained from cumulants along four independent routes:

``series``      expand the two generating functions
``partitions``  double sum over even set partitions and their coarsenings
``operator``    constant term of ``(d_{t,u} + g*)^{2k-1} g``
``paths``       weighted sum over odd Lukasiewicz paths

Every function is generic in the coefficient ring: entries may be ints,
Fractions, :class:`ExactScalar` or :class:`SymPoly`.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import combin
from .errors import GuardError, PochhammerZeroError
from .exactalg import (
    T,
    U,
    ExactScalar,
    SymPoly,
    TruncatedSeries,
    pochhammer,
    series_exp,
    series_log,
)

PARTITION_ROUTE_MAX_K = 5
METHODS = ("series", "partitions", "operator", "paths")


# -- sequences ----------------------------------------------------------


class _Seq:
    __slots__ = ()
    _field = ""

    @property
    def entries(self):
        return getattr(self, self._field)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def map(self, fn):
        return type(self)(tuple(fn(x) for x in self.entries))


def _norm_entries(values):
    out = []
    for v in values:
        if isinstance(v, bool):
            raise TypeError("boolean is not a sequence entry")
        if isinstance(v, int):
            v = Fraction(v)
        out.append(v)
    if not out:
        raise ValueError("sequences need at least one entry")
    return tuple(out)


@dataclass(frozen=True)
class CumulantSeq(_Seq):
    """``kappa[l-1]`` holds kappa_{2l}."""

    kappa: tuple
    _field = "kappa"

    def __post_init__(self):
        object.__setattr__(self, "kappa", _norm_entries(self.kappa))


@dataclass(frozen=True)
class MomentSeq(_Seq):
    """``m[k-1]`` holds m_{2k}."""

    m: tuple
    _field = "m"

    def __post_init__(self):
        object.__setattr__(self, "m", _norm_entries(self.m))


@dataclass(frozen=True)
class CoeffSeq(_Seq):
    """``a[n-1]`` holds a_{2n}; a_0 = 1 is implicit."""

    a: tuple
    _field = "a"

    def __post_init__(self):
        object.__setattr__(self, "a", _norm_entries(self.a))


def _as(cls, x):
    return x if isinstance(x, cls) else cls(tuple(x))


def generic_cumulants(K, prefix="k"):
    """Cumulants ``k2, k4, ..., k{2K}`` as independent symbols."""
    return CumulantSeq(tuple(SymPoly.symbol(f"{prefix}{2 * l}") for l in range(1, K + 1)))


def generic_moments(K, prefix="m"):
    return MomentSeq(tuple(SymPoly.symbol(f"{prefix}{2 * k}") for k in range(1, K + 1)))


def generic_coeffs(K, prefix="a"):
    return CoeffSeq(tuple(SymPoly.symbol(f"{prefix}{2 * n}") for n in range(1, K + 1)))


# -- parameters ---------------------------------------------------------


@dataclass(frozen=True)
class TUParams:
    t: object
    u: object

    def __post_init__(self):
        for name in ("t", "u"):
            v = getattr(self, name)
            if isinstance(v, int) and not isinstance(v, bool):
                object.__setattr__(self, name, Fraction(v))

    @classmethod
    def symbolic(cls):
        return cls(T, U)

    @classmethod
    def rectangular(cls, n, d):
        """``t = -d``, ``u = -d - n``: the (n, d) rectangular specialization."""
        return cls(Fraction(-d), Fraction(-d - n))

    @classmethod
    def gamma(cls, gamma, q):
        return cls(Fraction(gamma), Fraction(gamma) * Fraction(q))

    @classmethod
    def gamma_zero(cls, gamma):
        return cls(Fraction(gamma), Fraction(0))

    def is_symbolic(self):
        return isinstance(self.t, ExactScalar) or isinstance(self.u, ExactScalar)

    def evaluate(self, t=None, u=None, s=None):
        def ev(v):
            return v.evaluate(t, u, s) if isinstance(v, ExactScalar) else v

        return TUParams(ev(self.t), ev(self.u))


def _poch_tu(p: TUParams, n):
    return pochhammer(p.t, n) * pochhammer(p.u, n)


def _check_poch(p: TUParams, K):
    for n in range(1, K + 1):
        if not _poch_tu(p, n):
            raise PochhammerZeroError(
                f"(t)_{n}(u)_{n} vanishes at t={p.t}, u={p.u}; the inverse transform "
                f"is undefined from order {n} on",
                n,
            )


def _check_t(p: TUParams):
    if not p.t:
        raise ZeroDivisionError("t = 0: moments are not determined by the coefficients")


def _order(seq, K):
    if K is None:
        return len(seq)
    if K < 1 or K > len(seq):
        raise ValueError(f"order K={K} needs 1 <= K <= {len(seq)}")
    return K


def _fresh(x):
    return Fraction(x) if isinstance(x, int) else x


# -- generating-series routes ------------------------------------------


def _even_series(values, scale=None):
    """``1 + sum_n c_n z^{2n}`` or ``sum_n c_n z^{2n}`` helpers."""
    K = len(values)
    coeffs = [0] * (2 * K + 1)
    for n, v in enumerate(values, start=1):
        coeffs[2 * n] = v if scale is None else v * scale(n)
    return TruncatedSeries(2 * K, coeffs)


def coeffs_from_cumulants(kappa, p: TUParams, K=None, method="series"):
    kappa = _as(CumulantSeq, kappa)
    K = _order(kappa, K)
    ks = kappa.kappa[:K]
    if method == "partitions":
        return _coeffs_from_cumulants_partitions(ks, p, K)
    if method != "series":
        raise ValueError(f"unknown method {method!r}")
    E = series_exp(_even_series(ks, lambda l: Fraction(1, l)))
    return CoeffSeq(tuple(_fresh(E[2 * n]) * _poch_tu(p, n) for n in range(1, K + 1)))


def cumulants_from_coeffs(a, p: TUParams, K=None, method="series"):
    a = _as(CoeffSeq, a)
    K = _order(a, K)
    _check_poch(p, K)
    av = a.a[:K]
    if method == "partitions":
        return _cumulants_from_coeffs_partitions(av, p, K)
    if method != "series":
        raise ValueError(f"unknown method {method!r}")
    A = _even_series(av, lambda n: 1 / _poch_tu(p, n))
    A = A + 1
    L = series_log(A)
    return CumulantSeq(tuple(_fresh(L[2 * l]) * l for l in range(1, K + 1)))


def coeffs_from_moments(m, p: TUParams, K=None, method="recursion"):
    m = _as(MomentSeq, m)
    K = _order(m, K)
    mv = m.m[:K]
    if method == "series":
        E = series_exp(_even_series(mv, lambda k: p.t * Fraction(1, k)))
        return CoeffSeq(tuple(_fresh(E[2 * n]) for n in range(1, K + 1)))
    if method == "partitions":
        return _coeffs_from_moments_partitions(mv, p, K)
    if method != "recursion":
        raise ValueError(f"unknown method {method!r}")
    a = []
    for n in range(1, K + 1):
        acc = mv[n - 1]
        for k in range(1, n):
            acc = acc + mv[k - 1] * a[n - k - 1]
        a.append(acc * p.t * Fraction(1, n))
    return CoeffSeq(tuple(a))


def moments_from_coeffs(a, p: TUParams, K=None, method="recursion"):
    a = _as(CoeffSeq, a)
    K = _order(a, K)
    _check_t(p)
    av = a.a[:K]
    if method == "series":
        L = series_log(_even_series(av) + 1)
        return MomentSeq(tuple(_fresh(L[2 * k]) * k / p.t for k in range(1, K + 1)))
    if method == "partitions":
        return _moments_from_coeffs_partitions(av, p, K)
    if method != "recursion":
        raise ValueError(f"unknown method {method!r}")
    m = []
    for n in range(1, K + 1):
        acc = av[n - 1] * n / p.t
        for k in range(1, n):
            acc = acc - m[k - 1] * av[n - k - 1]
        m.append(acc)
    return MomentSeq(tuple(m))


# -- set-partition routes ----------------------------------------------


def _guard_partitions(K):
    if K > PARTITION_ROUTE_MAX_K:
        raise GuardError(f"partition routes support K <= {PARTITION_ROUTE_MAX_K}, got {K}")


@lru_cache(maxsize=None)
def _even_types(n2):
    """Counter ``block type -> number of even partitions of [n2] of that type``.

    Also records one representative partition per type.
    """
    counts, reps = Counter(), {}
    for p in combin.enumerate_even_partitions(n2):
        ty = p.block_type()
        counts[ty] += 1
        reps.setdefault(ty, p)
    return tuple(sorted(counts.items())), reps


def _seq_product(values, ty):
    out = Fraction(1)
    for size in ty:
        out = out * values[size // 2 - 1]
    return out


def _prod_int(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def _coeffs_from_cumulants_partitions(ks, p, K):
    _guard_partitions(K)
    out = []
    for n in range(1, K + 1):
        total = 0
        for ty, count in _even_types(2 * n)[0]:
            w = count * 2 ** len(ty) * _prod_int(factorial(b - 1) for b in ty)
            total = total + _seq_product(ks, ty) * w
        out.append(total * Fraction(1, factorial(2 * n)) * _poch_tu(p, n))
    return CoeffSeq(tuple(out))


def _cumulants_from_coeffs_partitions(av, p, K):
    _guard_partitions(K)
    out = []
    for n in range(1, K + 1):
        total = 0
        for ty, count in _even_types(2 * n)[0]:
            nb = len(ty)
            w = count * (-1) ** (nb - 1) * factorial(nb - 1)
            w = w * _prod_int(factorial(b) for b in ty)
            den = Fraction(1)
            for b in ty:
                den = den * _poch_tu(p, b // 2)
            total = total + _seq_product(av, ty) * (w / den)
        out.append(total * Fraction(1, 2 * factorial(2 * n - 1)))
    return CumulantSeq(tuple(out))


def _coeffs_from_moments_partitions(mv, p, K):
    _guard_partitions(K)
    out = []
    for n in range(1, K + 1):
        total = 0
        for ty, count in _even_types(2 * n)[0]:
            w = count * _prod_int(factorial(b - 1) for b in ty)
            total = total + _seq_product(mv, ty) * ((2 * p.t) ** len(ty) * w)
        out.append(total * Fraction(1, factorial(2 * n)))
    return CoeffSeq(tuple(out))


def _moments_from_coeffs_partitions(av, p, K):
    _guard_partitions(K)
    out = []
    for n in range(1, K + 1):
        total = 0
        for ty, count in _even_types(2 * n)[0]:
            nb = len(ty)
            w = count * (-1) ** (nb - 1) * factorial(nb - 1) * _prod_int(factorial(b) for b in ty)
            total = total + _seq_product(av, ty) * w
        out.append(total * Fraction(1, 2 * factorial(2 * n - 1)) / p.t)
    return MomentSeq(tuple(out))


@lru_cache(maxsize=None)
def _coarsening_types(ty):
    """Block types (with multiplicity) of all coarsenings of a partition of type ``ty``."""
    rep = _even_types(sum(ty))[1][ty]
    return tuple(sorted(Counter(c.block_type() for c in combin.coarsenings(rep)).items()))


def _inner_sum(ty, p, inverse):
    total = 0
    for cty, mult in _coarsening_types(ty):
        nb = len(cty)
        w = mult * (-1) ** (nb - 1) * factorial(nb - 1)
        prod = Fraction(1)
        for b in cty:
            prod = prod * _poch_tu(p, b // 2)
        total = total + (w / prod if inverse else prod * w)
    return total


def moments_from_cumulants_partitions(kappa, p: TUParams, K=None):
    """Double sum over even partitions sigma and coarsenings pi >= sigma."""
    kappa = _as(CumulantSeq, kappa)
    K = _order(kappa, K)
    _guard_partitions(K)
    _check_t(p)
    ks = kappa.kappa[:K]
    out = []
    for n in range(1, K + 1):
        total = 0
        for ty, count in _even_types(2 * n)[0]:
            w = count * 2 ** len(ty) * _prod_int(factorial(b - 1) for b in ty)
            weight = _inner_sum(ty, p, inverse=False) * w / p.t
            total = total + _seq_product(ks, ty) * weight
        out.append(total * Fraction(1, 2 * factorial(2 * n - 1)))
    return MomentSeq(tuple(out))


def cumulants_from_moments_partitions(m, p: TUParams, K=None):
    m = _as(MomentSeq, m)
    K = _order(m, K)
    _guard_partitions(K)
    _check_poch(p, K)
    mv = m.m[:K]
    out = []
    for n in range(1, K + 1):
        total = 0
        for ty, count in _even_types(2 * n)[0]:
            w = count * _prod_int(factorial(b - 1) for b in ty)
            weight = _inner_sum(ty, p, inverse=True) * (2 * p.t) ** len(ty) * w
            total = total + _seq_product(mv, ty) * weight
        out.append(total * Fraction(1, 2 * factorial(2 * n - 1)))
    return CumulantSeq(tuple(out))


# -- operator route ----------------------------------------------------


def apply_partial_tu(f: TruncatedSeries, p: TUParams) -> TruncatedSeries:
    """``z^{2m+1} -> (u+m) z^{2m}``, ``z^{2m} -> (t+m) z^{2m-1}``, ``1 -> 0``."""
    if f.order == 0:
        return TruncatedSeries(0, [0])
    out = []
    for j in range(1, f.order + 1):
        c = f.coeffs[j]
        if not c:
            out.append(0)
            continue
        m = j // 2
        out.append(c * ((p.u + m) if j % 2 else (p.t + m)))
    return TruncatedSeries(f.order - 1, out)


def _operator_step(f, g, p, keep):
    """``(d + g*) f`` with coefficients above degree ``keep`` dropped."""
    n = f.order
    out = [0] * (n + 1)
    for j in range(1, min(n, keep + 1) + 1):
        c = f.coeffs[j]
        if c:
            m = j // 2
            out[j - 1] = c * ((p.u + m) if j % 2 else (p.t + m))
    gnz = [(i, c) for i, c in enumerate(g.coeffs) if c]
    for j, c in enumerate(f.coeffs):
        if not c:
            continue
        for i, gc in gnz:
            if i + j > keep:
                break
            out[i + j] = out[i + j] + c * gc
    return TruncatedSeries(n, out)


def moments_from_cumulants_operator(kappa, p: TUParams, K=None):
    kappa = _as(CumulantSeq, kappa)
    K = _order(kappa, K)
    work = 4 * K
    g = [0] * (work + 1)
    for l, k in enumerate(kappa.kappa[:K], start=1):
        g[2 * l - 1] = k
    g = TruncatedSeries(work, g)
    f = g
    steps = 2 * K - 1
    out = []
    for j in range(1, steps + 1):
        keep = steps - j
        # a term of degree > keep can no longer reach z^0
        assert keep <= work, "working order too small"
        f = _operator_step(f, g, p, keep)
        if j % 2 == 1:
            out.append(_fresh(f.coeffs[0]))
    return MomentSeq(tuple(out))


# -- path route --------------------------------------------------------


@lru_cache(maxsize=None)
def _path_signatures(n2):
    """Group odd paths of length n2 by up-step content.

    Returns ``((up_counts, (down_counts, ...)), ...)`` with up_counts a sorted
    tuple of ``(rise, count)`` and each down_counts a tuple of ``(height, count)``.
    """
    groups = defaultdict(list)
    for path in combin.enumerate_luk_odd(n2):
        st = combin.path_stats(path)
        groups[tuple(st.up_count_by_rise.items())].append(tuple(st.down_from_height.items()))
    return tuple(sorted((k, tuple(v)) for k, v in groups.items()))


def _down_weight(h, p):
    s, odd = divmod(h, 2)
    return (p.u + s) if odd else (p.t + s)


def moments_from_cumulants_paths(kappa, p: TUParams, K=None):
    kappa = _as(CumulantSeq, kappa)
    K = _order(kappa, K)
    if K > combin.MAX_PATH_HALF_LENGTH:
        raise GuardError(f"path route supports K <= {combin.MAX_PATH_HALF_LENGTH}")
    ks = kappa.kappa[:K]
    weights = {}
    out = []
    for k in range(1, K + 1):
        total = 0
        for ups, downs in _path_signatures(2 * k):
            dsum = 0
            for down in downs:
                w = Fraction(1)
                for h, c in down:
                    if h not in weights:
                        weights[h] = _down_weight(h, p)
                    w = w * weights[h] ** c
                dsum = dsum + w
            kp = Fraction(1)
            for r, c in ups:
                kp = kp * ks[(r + 1) // 2 - 1] ** c
            total = total + kp * dsum
        out.append(total)
    return MomentSeq(tuple(out))


# -- dispatch ----------------------------------------------------------


def moments_from_cumulants(kappa, p: TUParams, K=None, method="series"):
    if method == "series":
        a = coeffs_from_cumulants(kappa, p, K)
        return moments_from_coeffs(a, p)
    if method == "partitions":
        return moments_from_cumulants_partitions(kappa, p, K)
    if method == "operator":
        return moments_from_cumulants_operator(kappa, p, K)
    if method == "paths":
        return moments_from_cumulants_paths(kappa, p, K)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")


def cumulants_from_moments(m, p: TUParams, K=None, method="series"):
    if method == "series":
        a = coeffs_from_moments(m, p, K)
        return cumulants_from_coeffs(a, p)
    if method == "partitions":
        return cumulants_from_moments_partitions(m, p, K)
    raise ValueError(f"method {method!r} only computes moments from cumulants")


# -- general sequences -------------------------------------------------


def sequence_convolution(a, b):
    """``c_k = sum_{i+j=k} a_i b_j`` with ``a_0 = b_0 = 1``."""
    a, b = _norm_entries(a), _norm_entries(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    A = (Fraction(1),) + a
    B = (Fraction(1),) + b
    out = []
    for k in range(1, len(a) + 1):
        acc = 0
        for i in range(k + 1):
            acc = acc + A[i] * B[k - i]
        out.append(acc)
    return tuple(out)


def sequence_cumulants(a):
    """``kappa`` with ``exp(sum_l kappa_l z^l) = 1 + sum_n a_n z^n``."""
    a = _norm_entries(a)
    L = series_log(TruncatedSeries(len(a), (Fraction(1),) + a))
    return tuple(_fresh(L[l]) for l in range(1, len(a) + 1))


def sequence_from_cumulants(kappa):
    kappa = _norm_entries(kappa)
    E = series_exp(TruncatedSeries(len(kappa), (0,) + kappa))
    return tuple(_fresh(E[n]) for n in range(1, len(kappa) + 1))


__all__ = [
    "CumulantSeq",
    "MomentSeq",
    "CoeffSeq",
    "TUParams",
    "METHODS",
    "generic_cumulants",
    "generic_moments",
    "generic_coeffs",
    "coeffs_from_cumulants",
    "cumulants_from_coeffs",
    "coeffs_from_moments",
    "moments_from_coeffs",
    "moments_from_cumulants",
    "cumulants_from_moments",
    "moments_from_cumulants_partitions",
    "cumulants_from_moments_partitions",
    "apply_partial_tu",
    "moments_from_cumulants_operator",
    "moments_from_cumulants_paths",
    "sequence_convolution",
    "sequence_cumulants",
    "sequence_from_cumulants",
]
