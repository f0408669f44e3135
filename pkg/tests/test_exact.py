from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tautint.exact import (
    SymmetricEvalContext,
    bernoulli_number,
    bernoulli_poly,
    binomial_ext,
    complete_homogeneous,
    elementary_symmetric,
    interpolate_polynomial,
    power_sum,
    stirling_generalized_first,
    stirling_generalized_second,
)

from oracles import (
    bernoulli_by_series,
    bernoulli_poly_by_series,
    exp_series,
    geometric_expansion,
    product_expansion,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def test_bernoulli_basics():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == F(-1, 2)
    assert bernoulli_number(4) == F(-1, 30)


def test_bernoulli_against_series_oracle():
    oracle = bernoulli_by_series(20)
    for m in range(21):
        assert bernoulli_number(m) == oracle[m]


def test_bernoulli_poly_values():
    assert bernoulli_poly(1, F(1, 2)) == 0
    assert bernoulli_poly(3, F(0)) == 0
    assert bernoulli_poly(3, F(1)) == 0
    # B_3(3/2) = B_3(1/2) + 3*(1/2)^2
    assert bernoulli_poly(3, F(3, 2)) == bernoulli_poly(3, F(1, 2)) + 3 * F(1, 4)


@given(st.integers(0, 12), rationals)
@settings(max_examples=60, deadline=None)
def test_bernoulli_poly_series_oracle(m, x):
    assert bernoulli_poly(m, x) == bernoulli_poly_by_series(m, F(x))


@given(st.integers(0, 20), rationals)
@settings(max_examples=60, deadline=None)
def test_bernoulli_difference_identity(m, x):
    x = F(x)
    assert bernoulli_poly(m + 1, x + 1) - bernoulli_poly(m + 1, x) == (m + 1) * x ** m


def test_bernoulli_reflection_and_minus_one():
    for m in range(21):
        assert bernoulli_poly(m, F(0)) == (-1) ** m * bernoulli_poly(m, F(1))
    for m in range(13):
        assert bernoulli_poly(m, F(-1)) == bernoulli_number(m) + (-1) ** m * m


def test_power_sum_examples():
    assert power_sum(1, SymmetricEvalContext(F(0), 3)) == 3
    assert power_sum(2, SymmetricEvalContext(F(1, 2), 2)) == F(5, 2)
    assert power_sum(7, SymmetricEvalContext(F(3), 0)) == 0


def test_symmetric_examples():
    ctx = SymmetricEvalContext(F(1), 3)
    assert elementary_symmetric(0, ctx) == 1
    assert complete_homogeneous(0, ctx) == 1
    assert elementary_symmetric(2, ctx) == 11
    assert complete_homogeneous(2, SymmetricEvalContext(F(1), 2)) == 7


@given(rationals, st.integers(0, 5), st.integers(0, 8))
@settings(max_examples=60, deadline=None)
def test_sigma_h_match_expansions(base, count, l):
    ctx = SymmetricEvalContext(F(base), count)
    vals = ctx.variables()
    assert elementary_symmetric(l, ctx) == product_expansion(vals, l)[l]
    assert complete_homogeneous(l, ctx) == geometric_expansion(vals, l)[l]


@given(rationals, st.integers(0, 4))
@settings(max_examples=25, deadline=None)
def test_newton_identities(base, count):
    # exp(sum (-1)^{m+1} p_m u^m / m) = sum sigma_l u^l, and the h-version
    ctx = SymmetricEvalContext(F(base), count)
    T = 10
    ps = [F(0)] * (T + 1)
    for m in range(1, T + 1):
        ps[m] = power_sum(m, ctx)
    sig_series = exp_series([F(0)] + [(-1) ** (m + 1) * ps[m] / m for m in range(1, T + 1)], T)
    h_series = exp_series([F(0)] + [ps[m] / m for m in range(1, T + 1)], T)
    for l in range(T + 1):
        assert sig_series[l] == elementary_symmetric(l, ctx)
        assert h_series[l] == complete_homogeneous(l, ctx)


def test_stirling_first_trivial_and_value():
    for k in range(6):
        assert stirling_generalized_first(k, 0, F(3, 7)) == 1
    assert stirling_generalized_first(2, 1, F(0)) == 1
    with pytest.raises(ValueError):
        stirling_generalized_first(2, 3, F(0))


@given(st.integers(0, 6), rationals)
@settings(max_examples=40, deadline=None)
def test_stirling_first_product_oracle(k, x):
    # sum_m gen1(k, m, x) psi^m = prod_{t=1}^{k} (1 + (x + k - t) psi)
    x = F(x)
    coeffs = product_expansion([x + k - t for t in range(1, k + 1)], k)
    for m in range(k + 1):
        assert stirling_generalized_first(k, m, x) == coeffs[m]


@given(st.integers(0, 6), st.integers(0, 6), rationals)
@settings(max_examples=40, deadline=None)
def test_stirling_second_series_oracle(k, m, x):
    # sum_m gen2(k, m, x) psi^m = prod_{t=1}^{k} (1 + (x - t) psi)^{-1}
    x = F(x)
    coeffs = geometric_expansion([t - x for t in range(1, k + 1)], m)
    assert stirling_generalized_second(k, m, x) == coeffs[m]


def test_binomial_ext_negative_top():
    assert binomial_ext(-1, 2) == 1
    assert binomial_ext(F(-3, 2), 2) == F(15, 8)
    assert binomial_ext(5, 2) == 10


def test_interpolation_roundtrip():
    pts = [(F(k), F(2) * k ** 3 - k + F(1, 3)) for k in range(5)]
    coeffs = interpolate_polynomial(pts)
    assert coeffs[0] == F(1, 3) and coeffs[1] == -1 and coeffs[3] == 2
    assert coeffs[2] == 0 and coeffs[4] == 0


def test_bernoulli_cache_concurrent_reads():
    # concurrent initialisation must agree (idempotent writes under the lock)
    import threading

    results = []

    def worker():
        results.append([bernoulli_number(m) for m in range(60)])

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
    assert results[0][58] == bernoulli_number(58)
