import json
from fractions import Fraction as F

from tautint.checks import (
    CheckGrid,
    admissible_a,
    check_counterexample_footnote,
    check_dilaton,
    check_multi_shift_a,
    check_multi_shift_s,
    check_pullback,
    check_segre_chern,
    check_shift_a,
    check_shift_s,
    check_string,
    check_vanishing_corollary,
    check_vanishing_thm,
    check_zero_r_symmetry,
    flat_basis,
    iter_suite,
    pairing_basis,
)


def test_pairing_basis_shape():
    basis = pairing_basis(1, 2)
    assert set(basis) == {0, 1, 2}
    assert basis[0] == [((), (0, 0))]
    assert (((1, 1),), (0, 0)) in basis[1]
    assert (((2, 1),), (0, 0)) in basis[2]
    assert (((1, 2),), (0, 0)) in basis[2]
    # psi-only monomials of each degree are all present
    assert ((), (2, 0)) in basis[2] and ((), (1, 1)) in basis[2]


def test_admissible_a():
    for (g, n, r, s) in [(1, 1, 2, 1), (0, 4, 3, 2), (2, 1, 3, -2), (1, 3, 2, -1)]:
        a = admissible_a(g, n, r, s)
        assert len(a) == n and all(1 <= ai <= r for ai in a)
        assert (sum(a) - (2 * g - 2 + n) * s) % r == 0


def test_shift_checks_examples():
    assert check_shift_s(1, 1, 2, 1, (1,), F(1)).passed
    assert check_shift_s(1, 1, 1, -2, (0,), F(1)).passed  # reduces to kappa bookkeeping
    assert check_shift_s(0, 4, 2, 0, (2, 2, 2, 2), F(1)).passed  # (s/r)^m = 0 branch
    assert check_shift_a(1, 1, 2, 0, (2,), 1, F(1)).passed
    assert check_shift_a(1, 1, 2, 1, (1,), 1, F(1, 2)).passed
    assert check_multi_shift_s(1, 1, 2, 1, (1,), 2, F(1)).passed
    assert check_multi_shift_s(0, 4, 3, -1, admissible_a(0, 4, 3, -1), 3, F(-1)).passed
    assert check_multi_shift_a(1, 1, 2, 1, (1,), 1, 2, F(1)).passed


def test_zero_r_and_pullback():
    assert check_zero_r_symmetry(1, 1, 2, (2,)).passed
    assert check_zero_r_symmetry(0, 4, 2, admissible_a(0, 4, 2, 0)).passed
    assert check_pullback(1, 1, 2, 3, (1,)).passed  # s outside [0, r]
    assert check_pullback(1, 1, 2, 0, (2,)).passed  # flat-unit case
    assert check_pullback(0, 3, 3, 1, admissible_a(0, 3, 3, 1)).passed


def test_string_dilaton():
    assert check_string(1, 1, 2, 0, (2,)).passed
    assert check_string(0, 3, 2, 1, admissible_a(0, 3, 2, 1)).passed
    assert check_dilaton(0, 3, 2, 0, (2, 2, 2)).passed
    assert check_dilaton(1, 1, 3, -1, admissible_a(1, 1, 3, -1), F(1, 2)).passed


def test_vanishings():
    assert check_vanishing_thm(1, 1, 2, -1, (1,)).passed
    assert check_vanishing_thm(1, 2, 2, 3, admissible_a(1, 2, 2, 3), F(-1)).passed
    assert check_vanishing_corollary(1, 1, 2, 3, (1,)).passed
    assert check_vanishing_corollary(1, 1, 2, -1, (1,)).passed
    assert check_vanishing_corollary(0, 4, 3, 5, admissible_a(0, 4, 3, 5), F(1, 2)).passed
    assert check_vanishing_corollary(0, 4, 3, -2, admissible_a(0, 4, 3, -2), F(2)).passed
    # 0 <= s < r degenerates to the plain vanishing
    rep = check_vanishing_corollary(1, 1, 3, 1, admissible_a(1, 1, 3, 1))
    assert rep.passed and "degenerate" in rep.expected


def test_segre_chern():
    assert check_segre_chern(1, 1, -1, F(1)).passed  # the chi/MV pair s=-1 vs 2
    assert check_segre_chern(0, 4, 0, F(1)).passed
    assert check_segre_chern(1, 2, 2, F(1, 2)).passed
    assert check_segre_chern(1, 1, 1, F(0)).passed  # x = 0 trivial


def test_footnote_counterexample():
    rep = check_counterexample_footnote()
    assert rep.passed, rep.details
    assert rep.parameters["deg0"] == "2"


def test_report_json_shape():
    rep = check_shift_s(0, 3, 1, 0, (0, 0, 0), F(1))
    payload = json.loads(rep.to_json())
    assert set(payload) == {"check", "parameters", "expected", "got", "pass"}
    assert payload["pass"] is True


def test_iter_suite_smallest():
    grid = CheckGrid(max_dim=0, max_r=2, s_values=(0, 1), x_values=(F(1),))
    reports = list(iter_suite(grid))
    assert reports, "suite must produce reports"
    bad = [r for r in reports if not r.passed]
    assert not bad, bad[0].to_json() if bad else None
