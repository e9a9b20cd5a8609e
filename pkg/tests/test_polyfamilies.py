from __future__ import annotations

import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mpoly.egfseries import egf_coefficients
from mpoly.exactnum import classic, make_params
from mpoly.polybernoulli import mpb_explicit
from mpoly.polycauchy import FIRST, SECOND, mpc_number_explicit
from mpoly.polyfamilies import (
    THM200,
    Polynomial,
    bernoulli_inverse_closed,
    cauchy_inverse_closed,
    h_poly_alt_eval,
    h_poly_recurrence_residual,
    h_poly_step_factor,
    h_polynomial,
    h_polynomial_explicit,
    mpb_poly_rstirling_eval,
    mpb_poly_weighted_eval,
    mpb_poly_weighted_inverse_check,
    mpb_poly_whitney_eval,
    mpb_polynomial,
    mpc_poly_dual,
    mpc_poly_dual_target,
    mpc_poly_inverse_check,
    mpc_poly_weighted_eval,
    mpc_polynomial,
    rising_factorial,
    thm200_check,
)
from mpoly.polybernoulli import build_h_table

from conftest import params_strategy, small_rationals

polys = st.lists(small_rationals(), max_size=5).map(Polynomial)
kinds = st.sampled_from([FIRST, SECOND])


@given(polys, polys, polys, small_rationals())
def test_polynomial_ring_and_evaluation(f, g, h, x):
    assert f * (g + h) == f * g + f * h
    assert (f * g)(x) == f(x) * g(x)
    assert (f - g)(x) == f(x) - g(x)
    assert (f - f).degree == -1


def test_polynomial_serialisation():
    assert Polynomial([Fraction(1, 6), -1, 1]).to_json() == ["1/6", "-1", "1"]
    assert Polynomial([0, 0]).to_json() == ["0"]
    assert json.loads(Polynomial([2, Fraction(-1, 3)]).dumps()) == ["2", "-1/3"]
    assert Polynomial([1, 0, 0]).degree == 0


def test_rising_factorial():
    r = rising_factorial(Fraction(2), 3)
    assert r == Polynomial.x() * Polynomial([2, 1]) * Polynomial([4, 1])
    assert rising_factorial(Fraction(1), 0) == 1


def _integral_oracle(kind, n, x0):
    """``int_0^1 (t-x)(t-x-1)...`` (first kind) or ``(-t-x)(-t-x-1)...`` (second)."""
    sign = 1 if kind is FIRST else -1
    poly = Polynomial([1])
    for j in range(n):
        poly = poly * Polynomial([-x0 - j, sign])
    return sum((c / (d + 1) for d, c in enumerate(poly.coeffs)), Fraction(0))


@given(kinds, st.integers(0, 6), small_rationals())
def test_classic_cauchy_polynomials_are_integrals(kind, n, x0):
    assert mpc_polynomial(kind, n, classic())(x0) == _integral_oracle(kind, n, x0)


@given(params_strategy(), kinds, st.integers(0, 6))
def test_polynomials_at_zero_are_numbers(p, kind, n):
    assert mpc_polynomial(kind, n, p)(0) == mpc_number_explicit(kind, n, p)
    assert mpb_polynomial(n, p)(0) == mpb_explicit(n, p)


@given(params_strategy(), kinds, st.integers(0, 6), small_rationals())
def test_cauchy_polynomial_routes(p, kind, n, x0):
    value = mpc_polynomial(kind, n, p)(x0)
    family = "cauchy1_poly" if kind is FIRST else "cauchy2_poly"
    assert egf_coefficients(family, p, n, x0=x0)[n] == value
    assert mpc_poly_weighted_eval(kind, n, p, x0) == value


@given(params_strategy(), st.integers(0, 6), small_rationals())
def test_inverse_sums_are_x_free(p, n, x0):
    assert mpc_poly_inverse_check(n, p, x0) == cauchy_inverse_closed(n, p)
    assert mpb_poly_weighted_inverse_check(n, p, x0) == bernoulli_inverse_closed(n, p)


@given(params_strategy(positive_only=True), kinds, st.integers(1, 6), small_rationals())
def test_polynomial_duality(p, kind, n, x0):
    assert mpc_poly_dual(kind, n, p, x0) == mpc_poly_dual_target(kind, n, p, x0)


@given(params_strategy(), st.integers(0, 6), small_rationals())
def test_bernoulli_polynomial_routes(p, n, x0):
    value = mpb_polynomial(n, p)(x0)
    assert egf_coefficients("bernoulli_poly", p, n, x0=x0)[n] == value
    assert mpb_poly_weighted_eval(n, p, x0) == value
    expected = sum((comb(n, i) * mpb_explicit(i, p) * (-p.q * x0) ** (n - i) for i in range(n + 1)), Fraction(0))
    assert value == expected


@given(params_strategy(), st.integers(0, 5), st.integers(0, 3))
def test_bernoulli_polynomial_at_r_and_r_over_h(p, n, r):
    assert mpb_poly_rstirling_eval(n, p, r) == mpb_polynomial(n, p)(r)
    assert mpb_poly_whitney_eval(n, p, 2, r) == mpb_polynomial(n, p)(Fraction(r, 2))


@given(params_strategy(positive_only=True), st.sampled_from(THM200), st.integers(1, 6), small_rationals())
def test_thm200(p, relation, n, x0):
    assert thm200_check(relation, n, p, x0).passed


@given(params_strategy(), st.integers(0, 4), st.integers(0, 3), small_rationals())
def test_h_polynomials(p, n, c, x0):
    poly = h_polynomial(n, c, p)
    assert poly == h_polynomial_explicit(n, c, p)
    assert poly(x0) == h_poly_alt_eval(n, c, p, x0)
    assert h_poly_recurrence_residual(n, c, p) == 0


@given(params_strategy(), st.integers(0, 4), st.integers(0, 3))
def test_h_polynomial_recurrence_at_zero_is_the_table(p, n, c):
    table = build_h_table(p, n + 1, c)
    assert table[n + 1, c] == h_poly_step_factor(p, c) * table[n, c + 1] - c * p.q * table[n, c]


def test_h_polynomial_column_zero_is_bernoulli_polynomial():
    p = make_params(2, "1/2", ["3"], 2, 1)
    for n in range(6):
        assert h_polynomial(n, 0, p) == mpb_polynomial(n, p)


def test_classic_bernoulli_polynomial():
    # B_1 = +1/2 convention: B_n(x) here is B_n(-x) in the +1/2 normalisation
    assert mpb_polynomial(2, classic()) == Polynomial([Fraction(1, 6), -1, 1])


def test_unknown_relation():
    with pytest.raises(ValueError):
        thm200_check("For99", 2, classic(), 0)
