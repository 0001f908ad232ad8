from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rectcum.errors import GuardError, PochhammerZeroError
from rectcum.exactalg import SymPoly
from rectcum.transforms import (
    METHODS,
    TUParams,
    coeffs_from_cumulants,
    coeffs_from_moments,
    cumulants_from_coeffs,
    cumulants_from_moments,
    generic_coeffs,
    generic_cumulants,
    generic_moments,
    moments_from_coeffs,
    moments_from_cumulants,
    sequence_convolution,
    sequence_cumulants,
    sequence_from_cumulants,
)

from conftest import TU_POINTS, same_rational_function
from oracles import CUMULANT_GOLDENS, MOMENT_GOLDENS

SYM = TUParams.symbolic()

def _check_against(expr: SymPoly, golden):
    assert len(expr.terms) == len(golden)
    for mono, want in golden.items():
        assert same_rational_function(expr.coeff(dict(mono)), want), (mono, want)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_moment_goldens(k):
    m = moments_from_cumulants(generic_cumulants(4), SYM, 4, "series").m
    _check_against(m[k - 1], MOMENT_GOLDENS[k])


@pytest.mark.parametrize("k", [1, 2, 3])
def test_cumulant_goldens(k):
    kap = cumulants_from_moments(generic_moments(3), SYM, 3).kappa
    _check_against(kap[k - 1], CUMULANT_GOLDENS[k])


def test_kappa4_squared_coefficient_of_m8():
    m8 = moments_from_cumulants(generic_cumulants(4), SYM, 4, "partitions").m[3]
    assert same_rational_function(m8.coeff({"k4": 2}), "u*(t+1)*(u+1)*(t+u+3)*(2*t*u+3*t+3*u+6)")


@pytest.mark.parametrize("K", [1, 2, 3, 4])
def test_four_routes_symbolic(K):
    res = [moments_from_cumulants(generic_cumulants(K), SYM, K, m) for m in METHODS]
    assert all(r == res[0] for r in res)


@pytest.mark.parametrize("t,u", TU_POINTS)
def test_four_routes_pointwise_k5(t, u):
    p = TUParams(t, u)
    res = [moments_from_cumulants(generic_cumulants(5), p, 5, m).m for m in METHODS]
    assert all(r == res[0] for r in res)


def test_inverse_routes_agree():
    m = generic_moments(4)
    assert cumulants_from_moments(m, SYM, 4, "series") == cumulants_from_moments(m, SYM, 4, "partitions")
    a = generic_coeffs(4)
    for method in ("series", "partitions"):
        assert cumulants_from_coeffs(coeffs_from_cumulants(generic_cumulants(4), SYM, 4, method), SYM) == \
            generic_cumulants(4)
        assert coeffs_from_cumulants(cumulants_from_coeffs(a, SYM, 4, method), SYM, 4, method) == a
    for method in ("recursion", "series", "partitions"):
        assert moments_from_coeffs(coeffs_from_moments(m, SYM, 4, method), SYM, 4, method) == m


rats = st.fractions(min_value=-6, max_value=6, max_denominator=9)


@given(st.lists(rats, min_size=1, max_size=5), st.sampled_from(TU_POINTS))
@settings(max_examples=30, deadline=None)
def test_round_trip_property(kappa, tu):
    p = TUParams(*tu)
    m = moments_from_cumulants(kappa, p, method="paths")
    assert cumulants_from_moments(m, p, method="partitions").kappa == tuple(kappa)


def test_zero_cumulants_give_zero_moments():
    assert moments_from_cumulants([0, 0, 0], SYM, method="operator").m == (0, 0, 0)


def test_rectangular_specialization_and_poch_zero():
    p = TUParams.rectangular(2, 3)
    assert (p.t, p.u) == (-3, -5)
    moments_from_cumulants([1, 2, 3, 4, 5], p)  # forward direction is fine
    with pytest.raises(PochhammerZeroError) as exc:
        cumulants_from_moments([1, 2, 3, 4, 5], p)
    assert exc.value.index == 4


def test_t_zero_rejected_for_moments():
    with pytest.raises(ZeroDivisionError):
        moments_from_coeffs([1, 2], TUParams(0, 1))


def test_partition_route_guard():
    with pytest.raises(GuardError):
        moments_from_cumulants(generic_cumulants(6), SYM, 6, "partitions")


def test_unknown_method():
    with pytest.raises(ValueError):
        moments_from_cumulants([1], SYM, method="magic")
    with pytest.raises(ValueError):
        cumulants_from_moments([1], SYM, method="paths")


def test_gamma_specializations():
    p = TUParams.gamma(Fraction(1, 2), 3)
    assert (p.t, p.u) == (Fraction(1, 2), Fraction(3, 2))
    p0 = TUParams.gamma_zero(2)
    assert moments_from_cumulants([1, 1], p0).m == (0, 0)


def test_sequence_helpers():
    a = (Fraction(1), Fraction(2), Fraction(3))
    assert sequence_from_cumulants(sequence_cumulants(a)) == a
    ka, kb = sequence_cumulants(a), sequence_cumulants((1, 0, 1))
    assert sequence_cumulants(sequence_convolution(a, (1, 0, 1))) == tuple(x + y for x, y in zip(ka, kb))


def test_symbolic_evaluate_matches_pointwise():
    m = moments_from_cumulants([1, 2, 3], SYM).m
    t, u = TU_POINTS[0]
    assert [x.evaluate(t, u) for x in m] == list(moments_from_cumulants([1, 2, 3], TUParams(t, u)).m)
