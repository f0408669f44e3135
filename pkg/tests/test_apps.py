from fractions import Fraction as F
from math import factorial

import pytest

from tautint.apps import (
    chi,
    chi_harer_zagier,
    chi_recursion_check,
    chi_table,
    chi_via_hodge,
    chi_via_omega,
    dyz_identity_check,
    mv_normalization,
    mv_segre_check,
    mv_via_hodge,
    mv_via_omega,
)

HZ_VALUES = {
    (0, 3): F(1),
    (0, 4): F(-1),
    (0, 5): F(2),
    (1, 1): F(-1, 12),
    (1, 2): F(1, 12),
    (2, 0): F(-1, 240),
    (2, 1): F(1, 120),
    (3, 0): F(1, 1008),
}


def test_harer_zagier_closed_form():
    for (g, n), v in HZ_VALUES.items():
        assert chi_harer_zagier(g, n).value == v, (g, n)


def test_hodge_route_special_cases_match_generic():
    # the hard-wired l = 0 terms at (0,3) and (1,1) equal the generic sums
    from tautint.hodge import hodge_monomial

    assert sum(
        hodge_monomial(0, 3, (i,) if i else (), (), (0, 0, 0)) for i in range(1)
    ) == F(1)
    assert sum(
        hodge_monomial(1, 1, (i,) if i else (), (), (0,)) for i in range(2)
    ) == F(1, 24)


def test_three_routes_small():
    for (g, n) in [(0, 3), (0, 4), (1, 1), (1, 2), (2, 0), (2, 1)]:
        hz = chi_harer_zagier(g, n).value
        assert chi_via_hodge(g, n).value == hz, (g, n)
        assert chi_via_omega(g, n).value == hz, (g, n)


def test_chi_omega_graph_route_small():
    for (g, n) in [(0, 3), (0, 4), (1, 1), (1, 2), (2, 0)]:
        assert chi_via_omega(g, n, route="graph").value == HZ_VALUES[(g, n)]


def test_recursion_check():
    for (g, n) in [(0, 3), (1, 1), (2, 0), (2, 1)]:
        assert chi_recursion_check(g, n).passed


def test_dyz_identity():
    rep = dyz_identity_check(2)
    assert rep.passed
    assert rep.got == str(F(-1, 240))
    with pytest.raises(ValueError):
        dyz_identity_check(1)


def test_mv_routes_and_known_normalized_values():
    # normalized values 2^{2g+1}(4g-4+n)!/(6g-7+2n)! * MV match the classical
    # table: (0,4) -> 2, (0,5) -> 1, (1,1) -> 2/3, (1,2) -> 1/3, (2,1) -> 29/840
    table = {(0, 4): F(2), (0, 5): F(1), (1, 1): F(2, 3), (1, 2): F(1, 3), (2, 1): F(29, 840)}
    for (g, n), v in table.items():
        mvv = mv_via_omega(g, n).value
        assert mv_via_hodge(g, n).value == mvv
        assert mv_normalization(g, n) * mvv == v, (g, n)


def test_mv_trivial_and_segre():
    assert mv_via_omega(0, 3).value == F(1)
    assert mv_via_hodge(0, 3).value == F(1)
    for (g, n) in [(0, 3), (0, 4), (1, 1), (1, 2)]:
        assert mv_segre_check(g, n).passed


def test_mv_normalization_domain():
    assert mv_normalization(1, 1) == F(2 ** 3 * factorial(1), factorial(1))
    with pytest.raises(ValueError):
        mv_normalization(0, 3)


def test_chi_table_contents():
    rows = chi_table(gmax=1, dimmax=1)
    keys = {(r.g, r.n, r.route) for r in rows}
    assert (0, 3, "harer_zagier") in keys and (1, 1, "omega") in keys
    vals = {(r.g, r.n): set() for r in rows}
    for r in rows:
        vals[(r.g, r.n)].add(r.value)
    assert all(len(v) == 1 for v in vals.values())


def test_unstable_rejected():
    with pytest.raises(ValueError):
        chi(0, 2)
    with pytest.raises(ValueError):
        mv_via_hodge(1, 0)
