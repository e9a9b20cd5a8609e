from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpoly.egfseries import (
    BiSeries,
    DivisionValuation,
    MissingEvaluationPoint,
    NonzeroConstant,
    TruncatedSeries,
    egf_coefficients,
    expm1_scaled,
    li_apply,
    lif_apply,
    series_div,
    series_exp,
    series_log1p,
)
from mpoly.exactnum import PoleError, classic, make_params

from conftest import small_rationals

ORDER = 6


def series(order=ORDER, zero_constant=False, unit=False):
    coeffs = st.lists(small_rationals(), min_size=order + 1, max_size=order + 1)
    s = coeffs.map(TruncatedSeries)
    if zero_constant:
        s = s.map(lambda f: f - f[0])
    if unit:
        s = s.filter(lambda f: f[0] != 0)
    return s


@given(series(), series(), series())
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f - f == TruncatedSeries.zero(ORDER)


@given(series(), series(unit=True))
def test_division_inverts_multiplication(f, g):
    assert series_div(f * g, g) == f
    assert (f / g) * g == f


@given(series(zero_constant=True), series(zero_constant=True))
def test_exp_is_a_homomorphism(f, g):
    assert series_exp(f + g) == series_exp(f) * series_exp(g)


@given(small_rationals(nonzero=True))
def test_exp_of_log1p(q):
    assert series_exp(series_log1p(q, ORDER)) == TruncatedSeries([1, q], ORDER)


@given(small_rationals())
def test_expm1_coefficients(c):
    assert expm1_scaled(c, ORDER).egf() == [Fraction(0)] + [c**n for n in range(1, ORDER + 1)]


def test_division_with_valuation_loses_order():
    f = TruncatedSeries([0, 0, 1, 1], 3)
    g = TruncatedSeries([0, 1], 3)
    assert series_div(f, g) == TruncatedSeries([0, 1, 1])
    with pytest.raises(DivisionValuation):
        series_div(TruncatedSeries([1], 3), g)
    with pytest.raises(DivisionValuation):
        series_div(f, TruncatedSeries.zero(3))


def test_exp_requires_zero_constant():
    with pytest.raises(NonzeroConstant):
        series_exp(TruncatedSeries([1, 1]))


@given(st.sampled_from([1, 2, 3, -1, -2]), st.integers(1, 3))
def test_lif_and_li_of_a_variable(k, a):
    # u = z: coefficients are read off directly
    z = TruncatedSeries.variable(ORDER)
    lif = lif_apply(k, a, z)
    li = li_apply(k, a, z)
    for n in range(ORDER + 1):
        assert lif[n] == Fraction(1, factorial(n)) / Fraction(n + a) ** k
        assert li[n] == (0 if n == 0 else 1 / Fraction(n + a) ** k)


def test_lif_pole():
    with pytest.raises(PoleError):
        lif_apply(1, -2, TruncatedSeries.variable(4))
    # negative order: the zero-base term just vanishes
    assert lif_apply(-1, -2, TruncatedSeries.variable(4))[2] == 0


@given(st.lists(st.lists(small_rationals(), min_size=4, max_size=4), min_size=4, max_size=4))
def test_biseries_inverse(grid):
    grid[0][0] = grid[0][0] or Fraction(1)
    f = BiSeries.from_grid(grid)
    one = BiSeries.constant(1, 3, 3)
    assert (f * f.inverse()).grid() == one.grid()


@given(st.lists(st.lists(small_rationals(), min_size=4, max_size=4), min_size=4, max_size=4))
def test_biseries_exp_matches_univariate_on_a_row(grid):
    grid[0][0] = Fraction(0)
    f = BiSeries.from_grid(grid)
    e = f.exp()
    # setting x = 0 leaves the y-series exp(f_0(y))
    assert e.rows[0] == series_exp(f.rows[0])
    # exp(f) * exp(-f) = 1
    assert (e * (-f).exp()).grid() == BiSeries.constant(1, 3, 3).grid()


def test_classic_families():
    assert egf_coefficients("cauchy1", classic(), 6) == [1, Fraction(1, 2), Fraction(-1, 6), Fraction(1, 4), Fraction(-19, 30), Fraction(9, 4), Fraction(-863, 84)]
    assert egf_coefficients("bernoulli", classic(), 6) == [1, Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)]


def test_bernoulli_poly_classic_is_binomial_shift():
    B = egf_coefficients("bernoulli", classic(), 5)
    x = Fraction(3, 5)
    poly = egf_coefficients("bernoulli_poly", classic(), 5, x0=x)
    for n in range(6):
        assert poly[n] == sum((comb(n, i) * B[i] * (-x) ** (n - i) for i in range(n + 1)), Fraction(0))


def test_polynomial_families_need_a_point():
    with pytest.raises(MissingEvaluationPoint):
        egf_coefficients("cauchy1_poly", classic(), 3)
    with pytest.raises(ValueError):
        egf_coefficients("nope", classic(), 3)


def test_double_gf_first_row_is_seed():
    p = make_params(2, 3, ["1/2"], 1, 1)
    grid = egf_coefficients("dgf_cauchy1", p, 3, K=3)
    # n = 0: l^a e^{a y}; coefficient k! [y^k] is l^a a^k
    assert [grid[0][k] for k in range(4)] == [p.l**2 * 2**k for k in range(4)]
