"""Finite-d convergence tables for the large-degree limit theorems.

Every finite-d number is exact; only CSV rendering rounds.  ``n`` is tied to
``d`` by ``n = (q - 1) d``, so ``q`` must make that an integer.
"""
from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

from .exactalg import parse_rational
from .finitefree import MonicPoly, exp_rect_operator, rect_conv_coeffs, rect_cumulants
from .rectfree import moments_from_qrect_cumulants, qrect_cumulants_from_moments
from .transforms import TUParams, moments_from_coeffs

FAMILIES = ("all-roots-one", "uniform-grid", "all-roots-zero")
DEFAULT_DS = (25, 50, 100, 200)
DMAX_DEFAULT = 200
DMAX_OPT_IN = 400
CSV_HEADER = ("d", "n", "q", "index", "value", "limit", "abs_err")


@dataclass(frozen=True)
class PolyFamily:
    name: str

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ValueError(f"unknown family {self.name!r}; expected one of {FAMILIES}")

    def generator(self, d) -> MonicPoly:
        return _family_poly(self.name, d)

    def limit_moments(self, K):
        """Exact even moments of the limiting symmetric measure."""
        if self.name == "all-roots-one":
            return tuple(Fraction(1) for _ in range(K))
        if self.name == "uniform-grid":
            return tuple(Fraction(1, k + 1) for k in range(1, K + 1))
        return tuple(Fraction(0) for _ in range(K))


@lru_cache(maxsize=32)
def _family_poly(name, d):
    if name == "all-roots-zero":
        return MonicPoly.monomial(d)
    if name == "all-roots-one":
        return MonicPoly.from_roots([1] * d)
    return MonicPoly.from_roots([Fraction(i, d) for i in range(1, d + 1)])


def _family(x):
    return x if isinstance(x, PolyFamily) else PolyFamily(x)


@dataclass(frozen=True)
class Row:
    d: int
    n: int
    q: Fraction
    index: int
    value: Fraction
    limit: Fraction

    @property
    def abs_err(self):
        return abs(self.value - self.limit)


@dataclass
class ExperimentReport:
    experiment: str
    rows: list
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.rows = sorted(self.rows, key=lambda r: (r.d, r.index))

    def row(self, d, index):
        for r in self.rows:
            if r.d == d and r.index == index:
                return r
        raise KeyError((d, index))

    def errors(self, index):
        """``{d: abs_err}`` for one index."""
        return {r.d: r.abs_err for r in self.rows if r.index == index}

    def decay_ratios(self, index):
        """``err(d_{j+1}) / err(d_j)`` along the sorted ds (None if err(d_j) = 0)."""
        errs = sorted(self.errors(index).items())
        return [(e2 / e1 if e1 else None) for (_, e1), (_, e2) in zip(errs, errs[1:])]

    def to_csv(self, precision=20):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow([r.d, r.n, _fmt_q(r.q), r.index, render_decimal(r.value, precision),
                        render_decimal(r.limit, precision), render_decimal(r.abs_err, precision)])
        return buf.getvalue()


def _fmt_q(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render_decimal(x: Fraction, precision=20):
    with localcontext() as ctx:
        ctx.prec = precision
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def regime_n(q, d):
    """``n = (q - 1) d``; rejects non-integral or negative values."""
    n = (q - 1) * d
    if n.denominator != 1 or n < 0:
        raise ValueError(f"n = (q-1)d = {n} is not a nonnegative integer for q={q}, d={d}")
    return int(n)


def _check_ds(ds):
    ds = sorted(set(int(d) for d in ds))
    if not ds or ds[0] < 1:
        raise ValueError("ds must be positive integers")
    if ds[-1] > DMAX_OPT_IN:
        raise ValueError(f"d={ds[-1]} exceeds the cap {DMAX_OPT_IN}")
    return ds


def _map(fn, args, jobs):
    if jobs and jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, args))
    return [fn(a) for a in args]


def _empirical(coeffs, d, K):
    a = list(coeffs[:K]) + [Fraction(0)] * max(0, K - len(coeffs))
    return moments_from_coeffs(a, TUParams(Fraction(-d), Fraction(0))).m


# -- cumulants ------------------------------------------------------------


def _cumulant_rows(args):
    name, q, lmax, d, limits = args
    n = regime_n(q, d)
    K = rect_cumulants(_family_poly(name, d), n, upto=lmax)
    rows = []
    for l in range(1, min(lmax, d) + 1):
        rows.append(Row(d, n, q, l, Fraction(-d) ** (2 * l - 1) * K[l - 1], limits[l - 1]))
    return rows


def cumulant_convergence(family, q, lmax, ds=DEFAULT_DS, jobs=1) -> ExperimentReport:
    """Scaled rectangular cumulants ``(-d)^{2l-1} K_{2l}`` against ``q^{-l} kappa^q_{2l}``."""
    fam = _family(family)
    q = Fraction(q)
    if q < 1:
        raise ValueError("q must be >= 1")
    ds = _check_ds(ds)
    for d in ds:
        regime_n(q, d)
    kq = qrect_cumulants_from_moments(fam.limit_moments(lmax), q)
    limits = [k / q ** l for l, k in enumerate(kq, start=1)]
    chunks = _map(_cumulant_rows, [(fam.name, q, lmax, d, limits) for d in ds], jobs)
    return ExperimentReport("cumulants", [r for c in chunks for r in c],
                            {"families": [fam.name], "q": q, "lmax": lmax, "ds": ds})


# -- convolution ----------------------------------------------------------


def _convolution_rows(args):
    nameP, nameR, q, kmax, d, limits = args
    n = regime_n(q, d)
    a = rect_conv_coeffs(_family_poly(nameP, d), _family_poly(nameR, d), n, upto=kmax)
    m = _empirical(a, d, kmax)
    return [Row(d, n, q, k, m[k - 1], limits[k - 1]) for k in range(1, kmax + 1)]


def convolution_convergence(famP, famR, q, kmax, ds=DEFAULT_DS, jobs=1) -> ExperimentReport:
    """Moments of the symmetrized roots of ``p_d (+)^n_d r_d`` against the free limit."""
    fp, fr = _family(famP), _family(famR)
    q = Fraction(q)
    if q < 1:
        raise ValueError("q must be >= 1")
    ds = _check_ds(ds)
    for d in ds:
        regime_n(q, d)
    ka = qrect_cumulants_from_moments(fp.limit_moments(kmax), q)
    kb = qrect_cumulants_from_moments(fr.limit_moments(kmax), q)
    limits = moments_from_qrect_cumulants([x + y for x, y in zip(ka, kb)], q).m
    chunks = _map(_convolution_rows, [(fp.name, fr.name, q, kmax, d, limits) for d in ds], jobs)
    return ExperimentReport("convolution", [r for c in chunks for r in c],
                            {"families": [fp.name, fr.name], "q": q, "kmax": kmax, "ds": ds})


# -- heat flow ------------------------------------------------------------


def heat_flow_target(family, q, s, K):
    """Moments of ``mu (+)_q lambda`` with ``lambda`` the rectangular Gaussian of
    variance ``q s^2 / (q - 1)``."""
    q, s = Fraction(q), Fraction(s)
    kq = list(qrect_cumulants_from_moments(_family(family).limit_moments(K), q))
    kq[0] += q * s * s / (q - 1)
    return moments_from_qrect_cumulants(kq, q).m


def _heat_rows(args):
    name, q, s, kmax, d, limits = args
    n = regime_n(q, d)
    p = _family_poly(name, d)
    upto = min(kmax, d)
    out = exp_rect_operator(p, n, s, upto=upto, check=False)
    m = _empirical(out.coeffs, d, kmax)
    before = rect_cumulants(p, n, upto=upto)
    after = rect_cumulants(out, n, upto=upto)
    shift = [Fraction(-s * s, n)] + [Fraction(0)] * (upto - 1)
    exact = all(b - a == sh for a, b, sh in zip(before, after, shift))
    return [Row(d, n, q, k, m[k - 1], limits[k - 1]) for k in range(1, kmax + 1)], (d, exact)


def heat_flow_convergence(family, q, s, kmax, ds=DEFAULT_DS, jobs=1) -> ExperimentReport:
    """Moments after ``exp(-(s^2/n) x^{-n} D x^{n+1} D)`` against the heat-flow target.

    ``metadata["cumulant_shift_exact"]`` maps each d to whether the rectangular
    cumulants moved by exactly ``(-s^2/n, 0, ..., 0)``.
    """
    fam = _family(family)
    q, s = Fraction(q), Fraction(s)
    if q <= 1:
        raise ValueError("heat flow needs q > 1")
    if s <= 0:
        raise ValueError("s must be positive")
    ds = _check_ds(ds)
    for d in ds:
        regime_n(q, d)
    limits = heat_flow_target(fam, q, s, kmax)
    res = _map(_heat_rows, [(fam.name, q, s, kmax, d, limits) for d in ds], jobs)
    rows = [r for chunk, _ in res for r in chunk]
    shift = dict(flag for _, flag in res)
    return ExperimentReport("heatflow", rows, {"families": [fam.name], "q": q, "s": s, "kmax": kmax,
                                               "ds": ds, "cumulant_shift_exact": shift})


def parse_ds(text, dmax=DMAX_DEFAULT):
    """``"25,50,100"`` or ``None`` (the doubling ladder up to ``dmax``)."""
    if text:
        return [int(x) for x in str(text).split(",")]
    return [d for d in DEFAULT_DS if d <= dmax] or [dmax]


__all__ = [
    "FAMILIES",
    "PolyFamily",
    "Row",
    "ExperimentReport",
    "CSV_HEADER",
    "render_decimal",
    "regime_n",
    "cumulant_convergence",
    "convolution_convergence",
    "heat_flow_convergence",
    "heat_flow_target",
    "parse_ds",
    "parse_rational",
]
