from fractions import Fraction
from math import comb

import pytest
from scipy.integrate import quad

from rectcum import rectfree as rf
from rectcum.errors import GuardError
from rectcum.exactalg import SymPoly

Q = rf.symbolic_q()
M = [SymPoly.symbol(f"m{2 * k}") for k in range(1, 8)]


def test_printed_cumulant_formulas():
    k = rf.qrect_cumulants_from_moments(M[:3], Q)
    qi = Q ** -1
    assert k[0] == M[0]
    assert k[1] == M[1] - (1 + qi) * M[0] ** 2
    assert k[2] == M[2] - 3 * (1 + qi) * M[1] * M[0] + (2 + 3 * qi + 2 * qi ** 2) * M[0] ** 3


@pytest.mark.parametrize("K", range(1, 8))
def test_symbolic_round_trip(K):
    k = rf.qrect_cumulants_from_moments(M[:K], Q)
    assert rf.moments_from_qrect_cumulants(k, Q).m == tuple(M[:K])


@pytest.mark.parametrize("q", [1, Fraction(3, 2), 2, 7])
def test_rational_round_trip(q):
    kappa = [Fraction(1, 3), Fraction(-2), Fraction(5, 7), 1, 0, Fraction(1, 11)]
    m = rf.moments_from_qrect_cumulants(kappa, q)
    assert rf.qrect_cumulants_from_moments(m, q) == tuple(kappa)


def test_q_equal_one_gaussian_is_catalan():
    m = rf.rect_gaussian_moments(1, 1, 6).m
    assert list(m) == [comb(2 * k, k) // (k + 1) for k in range(1, 7)]


def test_convolution_adds_cumulants():
    a = rf.moments_from_qrect_cumulants([1, 2, 3], 2)
    b = rf.moments_from_qrect_cumulants([Fraction(1, 2), 0, -1], 2)
    c = rf.qrect_free_convolution(a, b, 2)
    assert rf.qrect_cumulants_from_moments(c, 2) == (Fraction(3, 2), 2, 2)
    with pytest.raises(ValueError):
        rf.qrect_free_convolution(a, [1], 2)


def test_guards_and_domain():
    with pytest.raises(GuardError):
        rf.moments_from_qrect_cumulants([1] * 8, 2)
    with pytest.raises(ValueError):
        rf.moments_from_qrect_cumulants([1], Fraction(1, 2))


@pytest.mark.parametrize("q,s2", [(2, 1), (4, 1), (3, 2)])
def test_density_check_passes(q, s2):
    rep = rf.rect_gaussian_density_check(q, s2, 4)
    assert rep.passed(1e-6)
    assert abs(rep.mass - 1) < 1e-6 and rep.max_abs_error < 1e-6


@pytest.mark.parametrize("q,s2", [(2, 1), (5, Fraction(1, 2))])
def test_density_against_adaptive_quadrature(q, s2):
    lo, hi = rf.support_interval(q, s2)
    mass = 2 * quad(lambda x: float(rf.rect_gaussian_density(x, q, s2)), lo, hi, limit=200)[0]
    m4 = 2 * quad(lambda x: x ** 4 * float(rf.rect_gaussian_density(x, q, s2)), lo, hi, limit=200)[0]
    assert mass == pytest.approx(1, abs=1e-7)
    assert m4 == pytest.approx(float(rf.rect_gaussian_moments(q, s2, 2).m[1]), abs=1e-7)


def test_heat_flow_support():
    q, s = 3, Fraction(1, 2)
    s2 = Fraction(q) * s * s / (q - 1)
    a, b = rf.support_interval(q, s2)
    c, d = rf.heat_flow_interval(q, s)
    assert a == pytest.approx(c) and b == pytest.approx(d)


def test_nc_even_table_multiplicities():
    total = sum(mult for _, mult in rf.nc_even_table(3))
    assert total == 12
