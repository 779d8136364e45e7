import math

import pytest
from hypothesis import given, settings
from scipy.stats import t as scipy_t
from hypothesis import strategies as st

from weightspace.errors import DomainError
from weightspace.special import (betainc, erf, erfcinv, erfinv, normal_cdf, normal_isf, normal_ppf,
                                 normal_sf, t_cdf, t_ppf, t_sf, t_two_tailed)

from conftest import normal_cdf_quad, t_cdf_quad


@pytest.mark.parametrize("z", [-7.5, -4.0, -1.3, -0.2, 0.0, 0.4, 1.95, 3.3, 6.0])
def test_normal_cdf_matches_quadrature(z):
    assert normal_cdf(z) == pytest.approx(normal_cdf_quad(z), abs=1e-12)


def test_normal_tails():
    assert normal_cdf(-8) < 1e-14
    assert normal_cdf(8) > 1 - 1e-14
    assert normal_sf(8) == pytest.approx(6.22096057427178e-16, rel=1e-9)


@given(st.floats(-0.999999, 0.999999))
def test_erfinv_inverts_erf(y):
    assert erf(erfinv(y)) == pytest.approx(y, abs=2e-16 * 4)


@pytest.mark.parametrize("q", [1e-300, 1e-100, 1e-20, 1e-8, 0.01, 0.5, 1.0, 1.5, 1.999])
def test_erfcinv_inverts_erfc(q):
    x = erfcinv(q)
    assert math.erfc(x) == pytest.approx(q, rel=1e-13)


def test_erfinv_domain():
    for bad in (-1.0, 1.0, 2.0, math.nan):
        with pytest.raises(DomainError):
            erfinv(bad)


def test_normal_quantiles_are_inverses():
    assert normal_ppf(0.975) == pytest.approx(1.959963984540054, abs=1e-13)
    assert normal_isf(0.025) == pytest.approx(1.959963984540054, abs=1e-13)
    assert normal_ppf(1e-12) == pytest.approx(-normal_isf(1e-12), abs=1e-14)


def test_betainc_closed_forms():
    # I_x(1, 1) = x ; I_x(a, 1) = x**a ; I_x(1, b) = 1 - (1-x)**b
    assert betainc(1, 1, 0.3) == pytest.approx(0.3, abs=1e-15)
    assert betainc(2.5, 1, 0.4) == pytest.approx(0.4 ** 2.5, rel=1e-13)
    assert betainc(1, 3.0, 0.2) == pytest.approx(1 - 0.8 ** 3, rel=1e-13)
    assert betainc(2, 2, 0.0) == 0.0
    assert betainc(2, 2, 1.0) == 1.0


def test_t_cdf_examples():
    assert t_cdf(0.0, 7) == 0.5
    assert t_cdf(1.0, 1) == pytest.approx(0.5 + math.atan(1.0) / math.pi, abs=1e-12)
    oracle = t_cdf_quad(2.447, 6)
    assert abs(oracle - 0.975) < 5e-4
    assert t_cdf(2.447, 6) == pytest.approx(oracle, abs=1e-10)


@pytest.mark.parametrize("df", [1, 2, 6, 30])
@pytest.mark.parametrize("t", [-5.0, -2.2, -0.6, 0.3, 1.0, 2.73, 4.9])
def test_t_cdf_matches_quadrature(t, df):
    assert t_cdf(t, df) == pytest.approx(t_cdf_quad(t, df), abs=1e-10)


@given(st.floats(-50, 50), st.integers(1, 300))
def test_t_cdf_symmetry(t, df):
    assert t_cdf(-t, df) + t_cdf(t, df) == pytest.approx(1.0, abs=1e-10)


def test_t_cdf_approaches_normal():
    for i in range(81):
        t = -4 + 0.1 * i
        assert abs(t_cdf(t, 200) - normal_cdf(t)) < 2e-3


def test_t_tails_stay_relative():
    # tail computed without 1 - cdf cancellation
    assert t_sf(40.0, 6) == pytest.approx(scipy_t.sf(40.0, 6), rel=1e-11)
    assert t_sf(1e3, 30) == pytest.approx(scipy_t.sf(1e3, 30), rel=1e-10)
    assert t_two_tailed(0.0, 6) == 1.0


def test_t_ppf():
    assert t_ppf(0.975, 6) == pytest.approx(2.446911851144969, abs=1e-10)
    assert t_ppf(0.025, 6) == pytest.approx(-2.446911851144969, abs=1e-10)
    assert t_cdf(t_ppf(0.9, 3.5), 3.5) == pytest.approx(0.9, abs=1e-12)


def test_t_domain():
    with pytest.raises(DomainError):
        t_cdf(1.0, 0)
    with pytest.raises(DomainError):
        t_cdf(math.nan, 4)
