"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line
(also collected into the terminal summary) with its measured runtime."""
import random
import time
from fractions import Fraction
from math import comb

import pytest

from rectcum import combin, experiments as ex, finitefree as ff, qanalogue as qa, rectfree as rf
from rectcum.exactalg import S, T, U, SymPoly, q_factorial, q_pochhammer
from rectcum.transforms import METHODS, TUParams, cumulants_from_moments, generic_cumulants, \
    generic_moments, moments_from_cumulants

from conftest import ACCEPTANCE_LINES, TUS_POINTS, same_rational_function
from oracles import CUMULANT_GOLDENS, MOMENT_GOLDENS

SYM = TUParams.symbolic()
SEED = 1729


def report(number, name, budget, fn):
    t0 = time.perf_counter()
    failures = fn()
    dt = time.perf_counter() - t0
    ok = not failures and dt < budget
    detail = "" if not failures else f"  [{'; '.join(failures[:3])}]"
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {name}  ({dt:.2f}s of {budget}s){detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert not failures, failures
    assert dt < budget, f"runtime {dt:.1f}s exceeds {budget}s"


def _seeded_tu_points(count):
    rng = random.Random(SEED)
    pts = []
    while len(pts) < count:
        t = Fraction(rng.randint(-12, 12), rng.randint(1, 9))
        u = Fraction(rng.randint(-12, 12), rng.randint(1, 9))
        if all(not (v.denominator == 1 and v <= 0) for v in (t, u)):
            pts.append((t, u))
    return pts


def _random_rooted(rng, d):
    return ff.MonicPoly.from_roots([rng.randint(-4, 8) for _ in range(d)])


def test_criterion_1_golden_identities():
    def run():
        bad = []
        m = moments_from_cumulants(generic_cumulants(4), SYM, 4, "series").m
        for k, golden in MOMENT_GOLDENS.items():
            if len(m[k - 1].terms) != len(golden):
                bad.append(f"m{2 * k} term count")
            for mono, want in golden.items():
                if not same_rational_function(m[k - 1].coeff(dict(mono)), want):
                    bad.append(f"m{2 * k} {mono}")
        kap = cumulants_from_moments(generic_moments(3), SYM, 3).kappa
        for k, golden in CUMULANT_GOLDENS.items():
            if len(kap[k - 1].terms) != len(golden):
                bad.append(f"kappa{2 * k} term count")
            for mono, want in golden.items():
                if not same_rational_function(kap[k - 1].coeff(dict(mono)), want):
                    bad.append(f"kappa{2 * k} {mono}")
        k4sq = m[3].coeff({"k4": 2})
        if k4sq != U * (T + 1) * (U + 1) * (T + U + 3) * (2 * T * U + 3 * T + 3 * U + 6):
            bad.append("kappa4^2 coefficient of m8")
        return bad

    report(1, "symbolic golden identities", 10, run)


def test_criterion_2_four_routes():
    def run():
        bad = []
        for K in range(1, 5):
            res = [moments_from_cumulants(generic_cumulants(K), SYM, K, m).m for m in METHODS]
            if any(r != res[0] for r in res):
                bad.append(f"symbolic K={K}")
        for t, u in _seeded_tu_points(5):
            p = TUParams(t, u)
            res = [moments_from_cumulants(generic_cumulants(5), p, 5, m).m for m in METHODS]
            if any(r != res[0] for r in res):
                bad.append(f"K=5 at ({t},{u})")
        return bad

    report(2, "four-route equivalence", 60, run)


def test_criterion_3_counts_and_bijection():
    def run():
        bad = []
        counts = []
        for k in range(1, 6):
            parts = combin.enumerate_nc_even(2 * k)
            paths = combin.enumerate_luk_odd(2 * k)
            counts.append(len(parts))
            if len(parts) != len(paths) or len(parts) != comb(3 * k, k) // (2 * k + 1):
                bad.append(f"count k={k}")
            images = [combin.nc_to_path(p) for p in parts]
            if sorted(x.rises for x in images) != sorted(x.rises for x in paths):
                bad.append(f"image k={k}")
            if [combin.path_to_nc(x) for x in images] != parts:
                bad.append(f"round trip k={k}")
        if counts != [1, 3, 12, 55, 273]:
            bad.append(f"counts {counts}")
        return bad

    report(3, "combinatorial counts and bijection", 10, run)


def test_criterion_4_linearization():
    def run():
        rng = random.Random(SEED)
        bad = []
        for i in range(50):
            d, n = rng.randint(1, 6), rng.randint(0, 5)
            p, r = _random_rooted(rng, d), _random_rooted(rng, d)
            lhs = ff.rect_cumulants(ff.rectangular_convolution(p, r, n), n)
            rhs = [a + b for a, b in zip(ff.rect_cumulants(p, n), ff.rect_cumulants(r, n))]
            if len(lhs) != d or lhs != rhs:
                bad.append(f"rectangular pair {i}")
            lhs = ff.finite_free_cumulants(ff.symmetric_additive_convolution(p, r))
            rhs = [a + b for a, b in zip(ff.finite_free_cumulants(p), ff.finite_free_cumulants(r))]
            if lhs != rhs:
                bad.append(f"symmetric pair {i}")
        return bad

    report(4, "cumulant linearization", 20, run)


def test_criterion_5_operator_identity():
    def run():
        rng = random.Random(SEED + 5)
        bad = []
        for d in range(1, 6):
            for n in range(0, 5):
                p, r = _random_rooted(rng, d), _random_rooted(rng, d)
                if ff.apply_operator_polynomial(ff.operator_polynomial(p, n), r, n) != \
                        ff.rectangular_convolution(p, r, n).ascending():
                    bad.append(f"operator d={d} n={n}")
                if n == 0:
                    continue
                for s in (Fraction(1), Fraction(1, 3), Fraction(5, 2)):
                    out = ff.exp_rect_operator(p, n, s)
                    if out != ff.rectangular_convolution(p, ff.r_nd(n, d, s * s), n):
                        bad.append(f"heat d={d} n={n} s={s}")
                    shift = [b - a for a, b in zip(ff.rect_cumulants(p, n), ff.rect_cumulants(out, n))]
                    if shift != [-s * s / n] + [0] * (d - 1):
                        bad.append(f"shift d={d} n={n} s={s}")
        return bad

    report(5, "operator identities", 10, run)


def test_criterion_6_qrect_calculus():
    def run():
        bad = []
        q = rf.symbolic_q()
        qi = q ** -1
        m = [SymPoly.symbol(f"m{2 * k}") for k in range(1, 7)]
        k = rf.qrect_cumulants_from_moments(m[:3], q)
        want = (m[0], m[1] - (1 + qi) * m[0] ** 2,
                m[2] - 3 * (1 + qi) * m[1] * m[0] + (2 + 3 * qi + 2 * qi ** 2) * m[0] ** 3)
        if tuple(k) != want:
            bad.append("printed formulas")
        for K in range(1, 7):
            if rf.moments_from_qrect_cumulants(rf.qrect_cumulants_from_moments(m[:K], q), q).m != tuple(m[:K]):
                bad.append(f"round trip K={K}")
        for qq, s2 in ((2, 1), (4, 1), (3, 2)):
            rep = rf.rect_gaussian_density_check(qq, s2, 4)
            if abs(rep.mass - 1) >= 1e-6 or rep.max_abs_error >= 1e-6:
                bad.append(f"quadrature ({qq},{s2}): mass {rep.mass}, err {rep.max_abs_error:.2e}")
        return bad

    report(6, "q-rectangular calculus", 30, run)


def test_criterion_7_q_suite():
    def run():
        bad = []
        Q = S * S
        c = SymPoly.symbol("c")
        x = qa.QSeries.from_coeffs([0, 1, 0, 0, 0, 0, 0], "q")
        for k in range(6):
            got = [v if v else 0 for v in qa.q_symbolic_power(x, k).series.coeffs]
            if got != [1 if j == k else 0 for j in range(7)]:
                bad.append(f"x^[{k}]")
        f = qa.QSeries.from_coeffs([0, 0, c] + [0] * 6, "q^-1/2")
        for n in range(5):
            got = qa.q_symbolic_power(f, n)[2 * n]
            if got != c ** n * (S ** (n * (n - 1)) * q_factorial(n, 1 / S) / q_factorial(n, Q)):
                bad.append(f"(cz^2)^[{n}]")
        kap = [c / S, 0]
        m = qa.q_moments_from_coeffs(qa.q_coeffs_from_cumulants(kap, SYM), SYM).m
        m2 = c * (S * (1 - U) / (1 - Q))
        m4 = c ** 2 * ((1 - U) * (1 + Q - Q * T - Q * U) / (1 - Q) ** 2)
        if m[0] != m2 or m[1] != m4:
            bad.append("c-Gaussian m2/m4")
        w = [qa.q_path_weight(p, SYM, kap) for p in combin.enumerate_luk_odd(4) if max(p.rises) == 1]
        want = {c ** 2 * ((1 - Q * T) * (1 - U) / (1 - Q) ** 2), c ** 2 * (Q * (1 - U) ** 2 / (1 - Q) ** 2)}
        if set(w) != want or w[0] + w[1] != m4:
            bad.append("2k=4 path weights")
        a = qa.q_coeffs_from_cumulants([c / S, 0, 0], SYM).a
        for n in range(1, 4):
            if a[n - 1] != c ** n * (S ** (2 * n - n * n) * q_pochhammer(T, n) * q_pochhammer(U, n)
                                     / ((1 - Q) ** (2 * n) * q_factorial(n))):
                bad.append(f"c-Gaussian a{2 * n}")
        for K in (1, 2):
            kk = generic_cumulants(K)
            if not (qa.q_moments_series(kk, SYM, K) == qa.q_moments_operator(kk, SYM, K)
                    == qa.q_moments_paths(kk, SYM, K)):
                bad.append(f"symbolic routes K={K}")
        for K in (3, 4):
            kk = generic_cumulants(K)
            for t, u, s in TUS_POINTS:
                p = TUParams(t, u)
                if not (qa.q_moments_series(kk, p, K, s) == qa.q_moments_operator(kk, p, K, s)
                        == qa.q_moments_paths(kk, p, K, s)):
                    bad.append(f"pointwise routes K={K} ({t},{u},{s})")
        return bad

    report(7, "q-deformation suite", 60, run)


def test_criterion_8_asymptotics():
    def run():
        bad = []
        ds = (25, 50, 100, 200)
        zero = ex.heat_flow_convergence("all-roots-zero", 2, 1, 2, ds)
        if not all(zero.metadata["cumulant_shift_exact"].get(d) for d in ds):
            bad.append("all-roots-zero cumulant shift")
        if zero.row(200, 1).limit != 2 or zero.row(200, 1).abs_err >= Fraction(3, 100):
            bad.append(f"heat m2 err {float(zero.row(200, 1).abs_err)}")
        if zero.row(200, 2).limit != 6 or zero.row(200, 2).abs_err >= Fraction(1, 10):
            bad.append(f"heat m4 err {float(zero.row(200, 2).abs_err)}")
        one = ex.cumulant_convergence("all-roots-one", 2, 2, ds)
        for l in (1, 2):
            if one.row(200, l).abs_err >= Fraction(2, 100):
                bad.append(f"scaled cumulant l={l} err {float(one.row(200, l).abs_err)}")
            errs = [one.row(d, l).abs_err for d in ds]
            for e1, e2 in zip(errs, errs[1:]):
                if e2 > Fraction(3, 4) * e1:
                    bad.append(f"decay l={l}: {float(e2)} > 0.75*{float(e1)}")
        return bad

    report(8, "asymptotics", 120, run)
