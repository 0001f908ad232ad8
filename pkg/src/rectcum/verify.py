"""Self-check suite behind ``rectcum verify`` and ``rectcum qcheck``.

Each check returns a :class:`CheckResult`; nothing here raises on a failed
identity, so a broken build still produces a full table.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import combin, finitefree as ff, qanalogue as qa, rectfree as rf
from .exactalg import S, T, U, SymPoly, q_factorial, q_pochhammer
from .transforms import (
    METHODS,
    TUParams,
    cumulants_from_moments,
    generic_cumulants,
    generic_moments,
    moments_from_cumulants,
)

DEFAULT_Q_POINTS = (
    (Fraction(1, 3), Fraction(1, 5), Fraction(2, 7)),
    (Fraction(-2, 3), Fraction(3, 4), Fraction(3, 2)),
    (Fraction(5, 2), Fraction(-1, 7), Fraction(1, 2)),
    (Fraction(2), Fraction(1, 9), Fraction(-3, 5)),
    (Fraction(-4, 5), Fraction(-5, 3), Fraction(5, 4)),
)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def _run(suite, name, fn):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(suite, name, bool(ok), detail, time.perf_counter() - t0)


def random_points(seed, count, nonzero=True):
    """Seeded rational (t, u) points avoiding small nonpositive integers."""
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        t = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        u = Fraction(rng.randint(-9, 9), rng.randint(1, 7))
        if nonzero and any(v.denominator == 1 and v <= 0 for v in (t, u)):
            continue
        pts.append((t, u))
    return pts


# -- golden formulas in (t, u) ------------------------------------------


def golden_moments():
    k2, k4, k6, k8 = (SymPoly.symbol(f"k{i}") for i in (2, 4, 6, 8))
    t, u = T, U
    a1, b1 = t + 1, u + 1
    a2, b2 = t + 2, u + 2
    a3, b3 = t + 3, u + 3
    m2 = k2 * u
    m4 = k4 * (u * a1 * b1) + k2 ** 2 * (u * (t + u + 1))
    m6 = (k6 * (u * a1 * b1 * a2 * b2) + k2 * k4 * (3 * u * a1 * b1 * (t + u + 2))
          + k2 ** 3 * (u * (t * t + u * u + 3 * t * u + 3 * t + 3 * u + 2)))
    m8 = (k8 * (u * a1 * b1 * a2 * b2 * a3 * b3)
          + k2 * k6 * (4 * u * a1 * b1 * a2 * b2 * (t + u + 3))
          + k4 ** 2 * (u * a1 * b1 * (t + u + 3) * (2 * t * u + 3 * t + 3 * u + 6))
          + k2 ** 2 * k4 * (2 * u * a1 * b1 * (3 * t * t + 3 * u * u + 8 * t * u + 15 * t + 15 * u + 18))
          + k2 ** 4 * (u * (u ** 3 + t ** 3 + 6 * t * u * u + 6 * t * t * u + 6 * t * t + 6 * u * u
                            + 17 * t * u + 11 * t + 11 * u + 6)))
    return (m2, m4, m6, m8)


def golden_kappa4_squared_coefficient():
    return U * (T + 1) * (U + 1) * (T + U + 3) * (2 * T * U + 3 * T + 3 * U + 6)


def golden_cumulants():
    m2, m4, m6 = (SymPoly.symbol(f"m{i}") for i in (2, 4, 6))
    t, u = T, U
    d1 = u * (t + 1) * (u + 1)
    d2 = d1 * (t + 2) * (u + 2)
    k2 = m2 * (1 / u)
    k4 = m4 * (1 / d1) - m2 ** 2 * ((t + u + 1) / (u * d1))
    k6 = (m6 * (1 / d2) - m2 * m4 * (3 * (t + u + 2) / (u * d2))
          + m2 ** 3 * ((2 * t * t + 2 * u * u + 3 * t * u + 6 * t + 6 * u + 4) / (u * u * d2)))
    return (k2, k4, k6)


def fuss_catalan(k):
    return comb(3 * k, k) // (2 * k + 1)


# -- suites ---------------------------------------------------------------


def transforms_checks(seed=0):
    p = TUParams.symbolic()

    def goldens():
        got = moments_from_cumulants(generic_cumulants(4), p, 4, "paths").m
        bad = [2 * (i + 1) for i, (g, w) in enumerate(zip(got, golden_moments())) if g != w]
        k8 = got[3].coeff({"k4": 2})
        if k8 != golden_kappa4_squared_coefficient():
            bad.append("k4^2")
        return not bad, f"mismatch at {bad}" if bad else "m2..m8 exact"

    def inverse_goldens():
        got = cumulants_from_moments(generic_moments(3), p, 3).kappa
        ok = all(g == w for g, w in zip(got, golden_cumulants()))
        return ok, "kappa2..kappa6 exact"

    def four_routes_symbolic():
        for K in range(1, 5):
            res = [moments_from_cumulants(generic_cumulants(K), p, K, m).m for m in METHODS]
            if any(r != res[0] for r in res):
                return False, f"disagreement at K={K}"
        return True, "K<=4"

    def four_routes_points():
        kap = generic_cumulants(5)
        for t, u in random_points(seed, 5):
            pt = TUParams(t, u)
            res = [moments_from_cumulants(kap, pt, 5, m).m for m in METHODS]
            if any(r != res[0] for r in res):
                return False, f"disagreement at t={t}, u={u}"
        return True, "K=5 at 5 points"

    def round_trip():
        m = generic_moments(4)
        back = moments_from_cumulants(cumulants_from_moments(m, p, 4, "partitions"), p, 4, "series")
        return back.m == m.m, "moments -> cumulants -> moments, K=4"

    return [
        _run("transforms", "golden moments m2..m8", goldens),
        _run("transforms", "golden cumulants kappa2..kappa6", inverse_goldens),
        _run("transforms", "four routes symbolic", four_routes_symbolic),
        _run("transforms", "four routes pointwise", four_routes_points),
        _run("transforms", "round trip", round_trip),
    ]


def combin_checks(seed=0):
    def counts():
        got = [len(combin.enumerate_nc_even(2 * k)) for k in range(1, 6)]
        paths = [len(combin.enumerate_luk_odd(2 * k)) for k in range(1, 6)]
        want = [fuss_catalan(k) for k in range(1, 6)]
        return got == want == paths, f"{got}"

    def bijection():
        for k in range(1, 6):
            for pi in combin.enumerate_nc_even(2 * k):
                if combin.path_to_nc(combin.nc_to_path(pi)) != pi:
                    return False, f"round trip fails at {pi}"
            images = {combin.nc_to_path(pi) for pi in combin.enumerate_nc_even(2 * k)}
            if images != set(combin.enumerate_luk_odd(2 * k)):
                return False, f"not onto at k={k}"
        return True, "k<=5"

    return [_run("combin", "NC^even counts", counts), _run("combin", "path bijection", bijection)]


def _random_rooted(rng, d):
    return ff.MonicPoly.from_roots([rng.randint(0, 6) for _ in range(d)])


def finitefree_checks(seed=0, pairs=50):
    def linearization():
        rng = random.Random(seed)
        for _ in range(pairs):
            d, n = rng.randint(1, 6), rng.randint(0, 5)
            p, r = _random_rooted(rng, d), _random_rooted(rng, d)
            c = ff.rectangular_convolution(p, r, n)
            lhs = ff.rect_cumulants(c, n)
            rhs = [x + y for x, y in zip(ff.rect_cumulants(p, n), ff.rect_cumulants(r, n))]
            if lhs != rhs:
                return False, f"rectangular d={d} n={n}"
            cs = ff.symmetric_additive_convolution(p, r)
            lhs = ff.finite_free_cumulants(cs)
            rhs = [x + y for x, y in zip(ff.finite_free_cumulants(p), ff.finite_free_cumulants(r))]
            if lhs != rhs:
                return False, f"symmetric d={d}"
        return True, f"{pairs} pairs"

    def operator_identity():
        rng = random.Random(seed + 1)
        for d in range(1, 6):
            for n in range(0, 4):
                p, r = _random_rooted(rng, d), _random_rooted(rng, d)
                lhs = ff.rectangular_convolution(p, r, n).ascending()
                rhs = ff.apply_operator_polynomial(ff.operator_polynomial(p, n), r, n)
                if lhs != rhs:
                    return False, f"d={d} n={n}"
        return True, "d<=5"

    def heat_operator():
        rng = random.Random(seed + 2)
        for d in range(1, 6):
            for n in range(1, 4):
                for s in (Fraction(1), Fraction(1, 2), Fraction(3, 2)):
                    p = _random_rooted(rng, d)
                    out = ff.exp_rect_operator(p, n, s)
                    if out != ff.rectangular_convolution(p, ff.r_nd(n, d, s * s), n):
                        return False, f"convolution form d={d} n={n} s={s}"
                    shift = [b - a for a, b in zip(ff.rect_cumulants(p, n), ff.rect_cumulants(out, n))]
                    if shift != [-s * s / n] + [0] * (d - 1):
                        return False, f"cumulant shift d={d} n={n} s={s}"
        return True, "d<=5, n<=3"

    return [
        _run("finitefree", "cumulant linearization", linearization),
        _run("finitefree", "operator identity", operator_identity),
        _run("finitefree", "heat operator", heat_operator),
    ]


def rectfree_checks(seed=0):
    q = rf.symbolic_q()
    m = [SymPoly.symbol(f"m{2 * k}") for k in range(1, 7)]

    def qformulas():
        k = rf.qrect_cumulants_from_moments(m[:3], q)
        iq = q ** -1
        want = (
            m[0],
            m[1] - m[0] ** 2 * (1 + iq),
            m[2] - m[1] * m[0] * (3 * (1 + iq)) + m[0] ** 3 * (2 + 3 * iq + 2 * iq * iq),
        )
        return tuple(k) == want, "kappa^q_2,4,6"

    def round_trip():
        k = rf.qrect_cumulants_from_moments(m, q)
        return rf.moments_from_qrect_cumulants(k, q).m == tuple(m), "K=6 symbolic q"

    def quadrature():
        worst = 0.0
        for qq, s2 in ((2, 1), (4, 1), (3, 2)):
            rep = rf.rect_gaussian_density_check(qq, s2, 4)
            if not rep.passed(1e-6):
                return False, f"(q, sigma2)=({qq},{s2}) err={rep.max_abs_error:.3g}"
            worst = max(worst, rep.max_abs_error, abs(rep.mass - 1))
        return True, f"max error {worst:.2e}"

    return [
        _run("rectfree", "q-cumulant formulas", qformulas),
        _run("rectfree", "round trip", round_trip),
        _run("rectfree", "Gaussian quadrature", quadrature),
    ]


def q_checks(points=DEFAULT_Q_POINTS):
    c = SymPoly.symbol("c")
    q = S * S
    sym = TUParams.symbolic()

    def x_powers():
        x = qa.QSeries.from_coeffs([0, 1, 0, 0, 0, 0, 0], "q")
        for k in range(6):
            want = [0] * 7
            want[k] = 1
            if q_series_list(qa.q_symbolic_power(x, k)) != want:
                return False, f"k={k}"
        return True, "k<=5"

    def cz2_powers():
        f = qa.QSeries.from_coeffs([0, 0, c] + [0] * 6, "q^-1/2")
        for n in range(5):
            want = [0] * 9
            want[2 * n] = c ** n * (S ** (n * (n - 1)) * q_factorial(n, 1 / S) / q_factorial(n, q))
            if q_series_list(qa.q_symbolic_power(f, n)) != want:
                return False, f"n={n}"
        return True, "n<=4"

    def cgauss_moments():
        kap = [c * (1 / S), 0]
        m = qa.q_moments_from_coeffs(qa.q_coeffs_from_cumulants(kap, sym, 2), sym, 2).m
        ok = (m[0] == c * (S * (1 - U) / (1 - q))
              and m[1] == c ** 2 * ((1 - U) * (1 + q - q * T - q * U) / (1 - q) ** 2))
        return ok, "m2, m4 in c"

    def path_weights():
        kap = [c * (1 / S), 0]
        ws = [qa.q_path_weight(pth, sym, kap) for pth in combin.enumerate_luk_odd(4)
              if all(r <= 1 for r in pth.rises)]
        want = {c ** 2 * ((1 - q * T) * (1 - U) / (1 - q) ** 2), c ** 2 * (q * (1 - U) ** 2 / (1 - q) ** 2)}
        m4 = qa.q_moments_paths(kap, sym, 2).m[1]
        return set(ws) == want and ws[0] + ws[1] == m4, "two paths, sum = m4"

    def routes_symbolic():
        for K in (1, 2):
            kap = generic_cumulants(K)
            a = qa.q_moments_series(kap, sym, K).m
            b = qa.q_moments_operator(kap, sym, K).m
            cc = qa.q_moments_paths(kap, sym, K).m
            if not a == b == cc:
                return False, f"K={K}"
        return True, "K<=2"

    def routes_points():
        for K in (3, 4):
            kap = generic_cumulants(K)
            for t, u, s in points:
                pt = TUParams(t, u)
                a = qa.q_moments_series(kap, pt, K, s).m
                b = qa.q_moments_operator(kap, pt, K, s).m
                cc = qa.q_moments_paths(kap, pt, K, s).m
                if not a == b == cc:
                    return False, f"K={K} at (t,u,s)=({t},{u},{s})"
                back = qa.q_coeffs_from_moments(a, pt, K, s)
                if back != qa.q_coeffs_from_cumulants(kap, pt, K, s):
                    return False, f"composition inverse K={K} at ({t},{u},{s})"
        return True, f"K<=4 at {len(points)} points"

    def cgauss_coeffs():
        kap = [c * (1 / S), 0, 0]
        a = qa.q_coeffs_from_cumulants(kap, sym, 3).a
        for n in range(1, 4):
            want = c ** n * (S ** (2 * n) / S ** (n * n) * q_pochhammer(T, n) * q_pochhammer(U, n)
                             / ((1 - q) ** (2 * n) * q_factorial(n)))
            if a[n - 1] != want:
                return False, f"a_{2 * n}"
        return True, "a2..a6"

    return [
        _run("qanalogue", "x^[k] = x^k", x_powers),
        _run("qanalogue", "(cz^2)^[n] closed form", cz2_powers),
        _run("qanalogue", "c-Gaussian coefficients", cgauss_coeffs),
        _run("qanalogue", "c-Gaussian m2, m4", cgauss_moments),
        _run("qanalogue", "2k=4 path weights", path_weights),
        _run("qanalogue", "routes symbolic", routes_symbolic),
        _run("qanalogue", "routes pointwise", routes_points),
    ]


def q_series_list(f):
    return [x if x else 0 for x in f.series.coeffs]


def run_all(seed=0):
    out = []
    out += transforms_checks(seed)
    out += combin_checks(seed)
    out += finitefree_checks(seed)
    out += rectfree_checks(seed)
    out += q_checks()
    return out


def format_table(results):
    width = max((len(f"{r.suite}: {r.name}") for r in results), default=10)
    lines = []
    for r in results:
        label = f"{r.suite}: {r.name}"
        lines.append(f"{'PASS' if r.passed else 'FAIL'}  {label:<{width}}  {r.detail}")
    npass = sum(r.passed for r in results)
    lines.append(f"{npass}/{len(results)} checks passed")
    return "\n".join(lines)


def parse_point(text):
    """``"t=1/3,u=1/5,s=2/7"`` -> ``(t, u, s)`` as Fractions."""
    vals = {}
    for part in text.split(","):
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in ("t", "u", "s") or not val:
            raise ValueError(f"bad point component {part!r}; expected t=..,u=..,s=..")
        vals[key] = Fraction(val.strip())
    missing = {"t", "u", "s"} - set(vals)
    if missing:
        raise ValueError(f"point is missing {sorted(missing)}")
    return vals["t"], vals["u"], vals["s"]
