from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from tautint.exact import bernoulli_poly
from tautint.polys import (
    EdgeSeries,
    TautPolynomial,
    edge_local_factor,
    edge_series_remultiply,
    exp_kappa_series,
    psi_geometric,
    substitute_edge,
)


def P1(n=2, trunc=3):
    return TautPolynomial.one(n, trunc)


def test_truncation_kills_high_terms():
    one = TautPolynomial.one(1, 1)
    psi = TautPolynomial.psi(1, 1, 1)
    assert (one + psi) * (one - psi) == one  # psi^2 dies at trunc 1


def test_kappa_merge_and_zero_purge():
    k1 = TautPolynomial.kappa(1, 0, 4)
    sq = k1 * k1
    assert list(sq.terms) == [(((1, 2),), ())]
    z = TautPolynomial.kappa(2, 1, 4).scale(F(3)) + TautPolynomial.psi(1, 1, 4).scale(0)
    assert len(z.terms) == 1


def test_render_canonical():
    n, tr = 2, 4
    p = TautPolynomial.one(n, tr) - TautPolynomial.kappa(2, n, tr).scale(F(3, 4))
    assert p.render() == "1 - 3/4*k2"
    q = TautPolynomial.kappa(1, n, tr) * TautPolynomial.psi(2, n, tr, power=2)
    assert q.render() == "k1*psi2^2"


@st.composite
def sparse_polys(draw, n=2, trunc=4):
    out = TautPolynomial.zero(n, trunc)
    for _ in range(draw(st.integers(1, 4))):
        c = F(draw(st.integers(-6, 6)), draw(st.integers(1, 4)))
        ks = draw(st.lists(st.integers(1, 3), max_size=2))
        kappa = []
        for m in set(ks):
            kappa.append((m, ks.count(m)))
        psi = tuple(draw(st.integers(0, 2)) for _ in range(n))
        out = out + TautPolynomial.from_monomial(n, trunc, tuple(sorted(kappa)), psi, c)
    return out


@given(sparse_polys(), sparse_polys(), sparse_polys())
@settings(max_examples=40, deadline=None)
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=3), min_size=1, max_size=3))
@settings(max_examples=25, deadline=None)
def test_exp_inverse(coeffs):
    cs = {m + 1: c for m, c in enumerate(coeffs)}
    n, tr = 1, 6
    e = exp_kappa_series(cs, n, tr)
    einv = exp_kappa_series({m: -c for m, c in cs.items()}, n, tr)
    assert e * einv == TautPolynomial.one(n, tr)


def test_exp_kappa_examples():
    assert exp_kappa_series({}, 0, 3) == TautPolynomial.one(0, 3)
    e = exp_kappa_series({1: F(-1)}, 0, 2)
    want = (
        TautPolynomial.one(0, 2)
        - TautPolynomial.kappa(1, 0, 2)
        + TautPolynomial.from_monomial(0, 2, ((1, 2),), (), F(1, 2))
    )
    assert e == want
    # exp(-k1 - k2/2 - k3/3) expanded by hand through degree 3
    e3 = exp_kappa_series({m: F(-1, m) for m in (1, 2, 3)}, 0, 3)
    hand = {
        ((), ()): F(1),
        (((1, 1),), ()): F(-1),
        (((1, 2),), ()): F(1, 2),
        (((2, 1),), ()): F(-1, 2),
        (((1, 3),), ()): F(-1, 6),
        (((1, 1), (2, 1)), ()): F(1, 2),
        (((3, 1),), ()): F(-1, 3),
    }
    assert e3.terms == hand


def test_psi_geometric():
    assert psi_geometric(1, F(0), 1, 3) == TautPolynomial.one(1, 3)
    got = psi_geometric(1, F(1, 3), 1, 3)
    want = (
        TautPolynomial.one(1, 3)
        + TautPolynomial.psi(1, 1, 3).scale(F(1, 3))
        + TautPolynomial.psi(1, 1, 3, power=2).scale(F(1, 9))
        + TautPolynomial.psi(1, 1, 3, power=3).scale(F(1, 27))
    )
    assert got == want


def test_edge_factor_constant_term():
    # lowest-order term of the numerator is -x * B_2(w/r)/2 * (psi' + psi'')
    for (w, r, x) in [(0, 1, F(1)), (1, 2, F(1)), (1, 3, F(-2)), (0, 2, F(1, 2))]:
        series = edge_local_factor(w, r, x, 3)
        const = dict(series.terms).get((0, 0), F(0))
        assert const == -x * bernoulli_poly(2, F(w, r)) / 2
    assert dict(edge_local_factor(0, 1, F(1), 1).terms)[(0, 0)] == F(-1, 12)


def test_edge_factor_x_zero_vanishes():
    assert edge_local_factor(0, 2, F(0), 4).terms == ()


def test_edge_factor_remultiplication():
    # quotient * (psi' + psi'') reproduces the numerator: check low degrees
    # against a direct series expansion of 1 - exp(-S)
    from oracles import exp_series

    w, r, x, tr = 1, 2, F(1), 4
    series = edge_local_factor(w, r, x, tr)
    remul = edge_series_remultiply(series)
    # numerator coefficients via independent bivariate expansion
    import itertools

    coeffs = {}
    for m in range(1, tr + 2):
        c = (-x) ** m * bernoulli_poly(m + 1, F(w, r)) / (m * (m + 1))
        coeffs[(m, 0)] = coeffs.get((m, 0), F(0)) + c
        coeffs[(0, m)] = coeffs.get((0, m), F(0)) - (-1) ** m * c
    num = {(0, 0): F(0)}
    power = {(0, 0): F(1)}
    from math import factorial

    acc = {(0, 0): F(1)}
    for k in range(1, tr + 2):
        nxt = {}
        for (i, j), cv in power.items():
            for (a, b), cw in coeffs.items():
                if i + a + j + b <= tr + 1:
                    nxt[(i + a, j + b)] = nxt.get((i + a, j + b), F(0)) - cv * cw
        power = nxt
        for key, val in power.items():
            acc[key] = acc.get(key, F(0)) + val / factorial(k)
    for key in set(acc) | set(remul):
        expect = -acc.get(key, F(0)) + (1 if key == (0, 0) else 0)
        if sum(key) <= tr:
            assert remul.get(key, F(0)) == expect


def test_edge_factor_symmetry_r2():
    series = edge_local_factor(1, 2, F(1), 5)
    d = dict(series.terms)
    for (i, j), c in d.items():
        assert d.get((j, i), F(0)) == c


def test_substitute_edge():
    n, tr = 3, 2
    p = TautPolynomial.one(n, tr)
    s = EdgeSeries(tr, (((1, 0), F(1)),))  # the series psi'
    assert substitute_edge(s, p, 3, 2) == TautPolynomial.psi(3, n, tr)
    s2 = EdgeSeries(tr, (((1, 1), F(2)),))
    got = substitute_edge(s2, p, 1, 2)
    assert got == (TautPolynomial.psi(1, n, tr) * TautPolynomial.psi(2, n, tr)).scale(2)
    with pytest.raises(ValueError):
        substitute_edge(s, p, 2, 2)
