"""q-rectangular free probability on even-moment sequences."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import combin
from .errors import GuardError
from .exactalg import SymPoly

MAX_K = combin.MAX_PATH_HALF_LENGTH
SIMPSON_PANELS = 200_000
ENDPOINT_CLIP = 1e-12


@dataclass(frozen=True)
class SymMeasureMoments:
    """Even moments ``m[k-1] = m_{2k}`` of a symmetric measure."""

    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(Fraction(x) if isinstance(x, int) else x for x in self.m))

    def __len__(self):
        return len(self.m)

    def __iter__(self):
        return iter(self.m)

    def __getitem__(self, i):
        return self.m[i]


def symbolic_q(name="q"):
    return SymPoly.symbol(name)


def _check_q(q):
    if isinstance(q, (int, Fraction)) and q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if isinstance(q, int):
        return Fraction(q)
    return q


def _check_K(K):
    if K < 1 or K > MAX_K:
        raise GuardError(f"order K={K} outside 1..{MAX_K}")


@lru_cache(maxsize=None)
def nc_even_table(k):
    """``((block_type, even_stat), multiplicity)`` over NC^even(2k), sorted."""
    c = Counter((p.block_type(), combin.even_stat(p)) for p in combin.enumerate_nc_even(2 * k))
    return tuple(sorted(c.items()))


def _qpow(q, e):
    if e == 0:
        return Fraction(1)
    return q ** (-e)


def _prod(values, ty):
    out = Fraction(1)
    for size in ty:
        out = out * values[size // 2 - 1]
    return out


def moments_from_qrect_cumulants(kappa, q) -> SymMeasureMoments:
    """``m_{2k} = sum_{pi in NC^even(2k)} q^{-even(pi)} prod_B kappa_{|B|}``."""
    q = _check_q(q)
    kappa = [Fraction(x) if isinstance(x, int) else x for x in kappa]
    K = len(kappa)
    _check_K(K)
    out = []
    for k in range(1, K + 1):
        total = 0
        for (ty, e), mult in nc_even_table(k):
            total = total + _prod(kappa, ty) * _qpow(q, e) * mult
        out.append(total)
    return SymMeasureMoments(tuple(out))


def qrect_cumulants_from_moments(mu, q):
    """Solve the triangular system; the one-block partition isolates kappa_{2k}."""
    q = _check_q(q)
    m = list(mu.m if isinstance(mu, SymMeasureMoments) else mu)
    K = len(m)
    _check_K(K)
    kappa = []
    for k in range(1, K + 1):
        acc = m[k - 1]
        known = kappa + [0]
        for (ty, e), mult in nc_even_table(k):
            if ty == (2 * k,):
                continue
            acc = acc - _prod(known, ty) * _qpow(q, e) * mult
        kappa.append(Fraction(acc) if isinstance(acc, int) else acc)
    return tuple(kappa)


def qrect_free_convolution(mu, nu, q) -> SymMeasureMoments:
    if len(mu) != len(nu):
        raise ValueError(f"length mismatch: {len(mu)} vs {len(nu)}")
    a = qrect_cumulants_from_moments(mu, q)
    b = qrect_cumulants_from_moments(nu, q)
    return moments_from_qrect_cumulants([x + y for x, y in zip(a, b)], q)


def rect_gaussian_moments(q, sigma2, K) -> SymMeasureMoments:
    """Moments of the measure whose only nonzero cumulant is ``kappa_2 = sigma2``."""
    sigma2 = Fraction(sigma2) if isinstance(sigma2, (int, str)) else sigma2
    return moments_from_qrect_cumulants([sigma2] + [Fraction(0)] * (K - 1), q)


# -- density cross-check --------------------------------------------------


@dataclass(frozen=True)
class DensityReport:
    q: Fraction
    sigma2: Fraction
    support: tuple
    mass: float
    moments: tuple
    exact_moments: tuple
    max_abs_error: float
    support_matches_heat_flow_set: bool

    def passed(self, tol=1e-6):
        return abs(self.mass - 1) < tol and self.max_abs_error < tol and self.support_matches_heat_flow_set


def rect_gaussian_density(x, q, sigma2):
    """Density of the rectangular Gaussian (zero outside its support)."""
    q, sigma2 = float(q), float(sigma2)
    x = np.asarray(x, dtype=float)
    inner = 4 * q * sigma2**2 - (q * x**2 - (q + 1) * sigma2) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.sqrt(np.clip(inner, 0.0, None)) / (2 * np.pi * sigma2 * np.abs(x))
    return np.where(inner > 0, out, 0.0)


def support_interval(q, sigma2):
    sigma = math.sqrt(float(sigma2))
    r = 1 / math.sqrt(float(q))
    return (1 - r) * sigma, (1 + r) * sigma


def heat_flow_interval(q, s):
    """Positive half of the support set of the heat-flow limit at parameter ``s``."""
    q, s = float(q), float(s)
    return math.sqrt(q - 1) * s / (math.sqrt(q) + 1), math.sqrt(q - 1) * s / (math.sqrt(q) - 1)


def _simpson(fx, h):
    return h / 3 * (fx[0] + fx[-1] + 4 * fx[1:-1:2].sum() + 2 * fx[2:-1:2].sum())


def rect_gaussian_density_check(q, sigma2, K, panels=SIMPSON_PANELS, s=None) -> DensityReport:
    """Composite Simpson on the positive half of the support, doubled.

    The integration variable is the angle of a cosine substitution, which
    makes the integrand smooth at both edges.
    """
    q = Fraction(q)
    sigma2 = Fraction(sigma2)
    if q <= 1:
        raise ValueError("the density check needs q > 1")
    if panels % 2:
        panels += 1
    lo, hi = support_interval(q, sigma2)
    # x = mid - half*cos(theta) absorbs the square-root edges into sin(theta)
    mid, half = (lo + hi) / 2, (hi - lo) / 2
    theta = np.linspace(ENDPOINT_CLIP, np.pi - ENDPOINT_CLIP, panels + 1)
    h = theta[1] - theta[0]
    x = mid - half * np.cos(theta)
    fx = rect_gaussian_density(x, q, sigma2) * half * np.sin(theta)
    mass = 2 * _simpson(fx, h)
    x2 = x * x
    moms, w = [], fx.copy()
    for _ in range(K):
        w = w * x2
        moms.append(float(2 * _simpson(w, h)))
    exact = rect_gaussian_moments(q, sigma2, K).m
    err = max(abs(a - float(b)) for a, b in zip(moms, exact)) if K else 0.0

    # support of lambda with sigma^2 = q s^2/(q-1) is the heat-flow set for s
    if s is None:
        s = math.sqrt(float(sigma2) * float(q - 1) / float(q))
    s2q = float(q) * float(s) ** 2 / float(q - 1)
    a1, b1 = support_interval(q, s2q)
    a2, b2 = heat_flow_interval(q, s)
    match = math.isclose(a1, a2, rel_tol=1e-12) and math.isclose(b1, b2, rel_tol=1e-12)
    return DensityReport(q, sigma2, (lo, hi), float(mass), tuple(moms), tuple(exact), float(err), match)


__all__ = [
    "SymMeasureMoments",
    "symbolic_q",
    "nc_even_table",
    "moments_from_qrect_cumulants",
    "qrect_cumulants_from_moments",
    "qrect_free_convolution",
    "rect_gaussian_moments",
    "rect_gaussian_density",
    "rect_gaussian_density_check",
    "support_interval",
    "heat_flow_interval",
    "DensityReport",
]
