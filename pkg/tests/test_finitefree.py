from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rectcum import finitefree as ff
from rectcum.finitefree import MonicPoly, RectParams

roots_st = st.lists(st.integers(min_value=0, max_value=6), min_size=1, max_size=6)


def test_monic_poly_basics():
    p = MonicPoly.from_roots([1, 2])
    assert p.coeffs == (-3, 2)
    assert p.ascending() == [2, -3, 1]
    assert p(Fraction(1)) == 0
    assert MonicPoly.from_ascending([2, -3, 1]) == p
    assert str(p) == "x^2 - 3*x + 2"
    assert MonicPoly.from_json(p.to_json()) == p
    with pytest.raises(ValueError):
        MonicPoly.from_ascending([1, 2])
    with pytest.raises(ValueError):
        MonicPoly.from_json({"degree": 3, "coeffs": ["1"]})


def test_rect_params_validation():
    with pytest.raises(ValueError):
        RectParams(-1, 2)
    assert ff.rect_cumulants(MonicPoly.from_roots([1, 2]), RectParams(2, 2)) == \
        ff.rect_cumulants(MonicPoly.from_roots([1, 2]), 2)


def test_symmetric_convolution_shift_oracle():
    # (x - c)^d is the translation by c
    p = MonicPoly.from_roots([1, 4, 5])
    r = MonicPoly.from_roots([2, 2, 2])
    assert ff.symmetric_additive_convolution(p, r) == MonicPoly.from_roots([3, 6, 7])


def test_degree_one_rectangular():
    out = ff.rectangular_convolution(MonicPoly.from_roots([3]), MonicPoly.from_roots([5]), 4)
    assert out == MonicPoly.from_roots([8])


@given(roots_st, st.integers(min_value=0, max_value=5))
def test_identity_element(roots, n):
    p = MonicPoly.from_roots(roots)
    e = MonicPoly.monomial(p.degree)
    assert ff.rectangular_convolution(p, e, n) == p
    assert ff.symmetric_additive_convolution(p, e) == p


@given(roots_st, st.data(), st.integers(min_value=0, max_value=5))
@settings(max_examples=60, deadline=None)
def test_linearization(roots, data, n):
    p = MonicPoly.from_roots(roots)
    r = MonicPoly.from_roots(data.draw(st.lists(st.integers(0, 6), min_size=p.degree, max_size=p.degree)))
    c = ff.rectangular_convolution(p, r, n)
    assert ff.rect_cumulants(c, n) == [a + b for a, b in zip(ff.rect_cumulants(p, n), ff.rect_cumulants(r, n))]
    cs = ff.symmetric_additive_convolution(p, r)
    assert ff.finite_free_cumulants(cs) == [
        a + b for a, b in zip(ff.finite_free_cumulants(p), ff.finite_free_cumulants(r))
    ]
    assert ff.rectangular_convolution(p, r, n) == ff.rectangular_convolution(r, p, n)


@given(roots_st, st.integers(min_value=0, max_value=4))
def test_cumulants_invert(roots, n):
    p = MonicPoly.from_roots(roots)
    assert ff.poly_from_rect_cumulants(ff.rect_cumulants(p, n), n, p.degree) == p


def test_empirical_moments_match_roots():
    roots = [Fraction(1, 2), 2, 3, 0]
    p = MonicPoly.from_roots(roots)
    m = ff.empirical_symmetric_moments(p, 6).m
    assert list(m) == [sum(Fraction(r) ** k for r in roots) / 4 for k in range(1, 7)]


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("n", range(0, 4))
def test_operator_identity(d, n, rng):
    p = MonicPoly.from_roots([rng.randint(0, 5) for _ in range(d)])
    r = MonicPoly.from_roots([rng.randint(0, 5) for _ in range(d)])
    lhs = ff.rectangular_convolution(p, r, n).ascending()
    assert ff.apply_operator_polynomial(ff.operator_polynomial(p, n), r, n) == lhs


def test_operator_single_step():
    # x^i -> i (i + n) x^{i-1}
    assert ff.rect_diff_once([0, 0, 0, 1], 2) == [0, 0, 15]
    assert ff.rect_diff_operator([0, 0, 0, 1], 2, 2) == [0, 3 * 5 * 2 * 4]
    with pytest.raises(ValueError):
        ff.rect_diff_operator([1, 1], 0, 2)


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("n", [1, 2, 5])
@pytest.mark.parametrize("s", [Fraction(1), Fraction(2, 3)])
def test_heat_operator(d, n, s, rng):
    p = MonicPoly.from_roots([rng.randint(0, 4) for _ in range(d)])
    out = ff.exp_rect_operator(p, n, s)
    assert out == ff.rectangular_convolution(p, ff.r_nd(n, d, s * s), n)
    shift = [b - a for a, b in zip(ff.rect_cumulants(p, n), ff.rect_cumulants(out, n))]
    assert shift == [-s * s / n] + [0] * (d - 1)


def test_r_nd_is_one_cumulant():
    assert ff.rect_cumulants(ff.r_nd(3, 4, Fraction(1, 2)), 3) == [Fraction(-1, 6), 0, 0, 0]
    assert ff.poly_from_rect_cumulants([Fraction(-1, 6)], 3, 4) == ff.r_nd(3, 4, Fraction(1, 2))


def test_heat_operator_truncated_head():
    p = MonicPoly.from_roots([1, 2, 3, 4, 5])
    full = ff.exp_rect_operator(p, 2, 1)
    head = ff.exp_rect_operator(p, 2, 1, upto=2)
    assert head.coeffs[:2] == full.coeffs[:2] and head.coeffs[2:] == (0, 0, 0)


def test_heat_operator_needs_n():
    with pytest.raises(ValueError):
        ff.exp_rect_operator(MonicPoly.from_roots([1]), 0, 1)


def test_degree_mismatch():
    with pytest.raises(ValueError):
        ff.rectangular_convolution(MonicPoly.from_roots([1]), MonicPoly.from_roots([1, 2]), 1)
