"""Machine verification of the Omega-class identities.

Class identities are certified at pairing level: both sides are integrated
against every kappa/psi monomial of each complementary degree (boundary
classes are not part of the data model, so this tests the image of the
identity in the monomial pairing, stated as such in the reports).  Failures
record the first differing pairing with both exact values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .exact import (
    SymmetricEvalContext,
    power_sum,
    stirling_generalized_first,
    stirling_generalized_second,
)
from .intersect import integrate_monomial
from .omega import OmegaSpec, omega_integral, omega_pairings, omega_r1_parts
from .polys import Monomial, TautPolynomial, monomial_degree, psi_geometric
from .psi import is_stable
from .reports import CheckReport


# -- pairing bases ---------------------------------------------------------------


def _kappa_parts(maxdeg: int) -> list[tuple[tuple[int, int], ...]]:
    """All kappa monomials (as sorted (index, exponent) tuples) of degree <= maxdeg."""
    out: list[tuple[tuple[int, int], ...]] = [()]
    def rec(minidx: int, budget: int, cur: list[tuple[int, int]]):
        for m in range(minidx, budget + 1):
            for e in range(1, budget // m + 1):
                item = cur + [(m, e)]
                out.append(tuple(item))
                rec(m + 1, budget - m * e, item)
    rec(1, maxdeg, [])
    return out


def _psi_vectors(n: int, total: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _psi_vectors(n - 1, total - first):
            yield (first,) + rest


def _psi_upto(n: int, maxtotal: int) -> Iterator[tuple[int, ...]]:
    for total in range(max(maxtotal, -1) + 1):
        yield from _psi_vectors(n, total)


def pairing_basis(g: int, n: int, include_kappa: bool = True) -> dict[int, list[Monomial]]:
    """All kappa/psi monomials of each degree 0..dim, keyed by degree."""
    dim = 3 * g - 3 + n
    out: dict[int, list[Monomial]] = {k: [] for k in range(dim + 1)}
    kparts = _kappa_parts(dim) if include_kappa else [()]
    for kap in kparts:
        kdeg = sum(m * e for m, e in kap)
        for rest in range(dim - kdeg + 1):
            for psi in _psi_vectors(n, rest):
                out[kdeg + rest].append((kap, psi))
    for k in out:
        out[k].sort()
    return out


def flat_basis(g: int, n: int, include_kappa: bool = True) -> list[Monomial]:
    basis = pairing_basis(g, n, include_kappa)
    return [m for k in sorted(basis) for m in basis[k]]


# -- helpers ----------------------------------------------------------------------


def _pair_with_factor(
    g: int, n: int, spec: OmegaSpec, factor: TautPolynomial, monos: Iterable[Monomial]
) -> dict[Monomial, Fraction]:
    """int Omega_spec * factor * mono for each basis monomial."""
    dim = 3 * g - 3 + n
    needed: set[Monomial] = set()
    prods: dict[Monomial, list[tuple[Monomial, Fraction]]] = {}
    for mono in monos:
        kap, psi = mono
        shifted = factor.mul_monomial(kap, {i + 1: d for i, d in enumerate(psi) if d})
        terms = list(shifted.terms.items())
        prods[mono] = terms
        needed.update(m for m, _ in terms)
    pair = omega_pairings(g, n, spec, sorted(needed)) if needed else {}
    out = {}
    for mono, terms in prods.items():
        out[mono] = sum((c * pair[m] for m, c in terms), Fraction(0))
    return out


def _compare_pairings(
    name: str,
    params: dict,
    lhs: dict[Monomial, Fraction],
    rhs: dict[Monomial, Fraction],
) -> CheckReport:
    diffs = []
    for mono in sorted(lhs):
        if lhs[mono] != rhs[mono]:
            diffs.append(f"pairing {mono}: lhs={lhs[mono]} rhs={rhs[mono]}")
    return CheckReport(
        check=name,
        parameters=params,
        expected="all pairings equal (pairing-certified identity)",
        got="equal" if not diffs else diffs[0],
        passed=not diffs,
        details=diffs[:5],
    )


def _one(n: int, dim: int) -> TautPolynomial:
    return TautPolynomial.one(n, dim)


# -- Omega-class property checks --------------------------------------------------


def check_shift_s(g: int, n: int, r: int, s: int, a: tuple[int, ...], x) -> CheckReport:
    """Omega(r, s+r; a) = Omega(r, s; a) * exp(sum (-x)^m/m (s/r)^m kappa_m)."""
    x = Fraction(x)
    dim = 3 * g - 3 + n
    basis = flat_basis(g, n)
    lhs = omega_pairings(g, n, OmegaSpec(r, s + r, a, x), basis)
    coeffs = {m: (-x) ** m * Fraction(s, r) ** m / m for m in range(1, dim + 1)}
    from .polys import exp_kappa_series

    factor = exp_kappa_series(coeffs, n, dim)
    rhs = _pair_with_factor(g, n, OmegaSpec(r, s, a, x), factor, basis)
    return _compare_pairings(
        "shift_s", {"g": g, "n": n, "r": r, "s": s, "a": a, "x": x}, lhs, rhs
    )


def check_multi_shift_s(g: int, n: int, r: int, s: int, a: tuple[int, ...], N: int, x) -> CheckReport:
    """Omega(r, s+Nr; a) = Omega(r, s; a) * exp(sum (-x)^m/m p_m(s/r..s/r+N-1) kappa_m)."""
    x = Fraction(x)
    dim = 3 * g - 3 + n
    basis = flat_basis(g, n)
    lhs = omega_pairings(g, n, OmegaSpec(r, s + N * r, a, x), basis)
    ctx = SymmetricEvalContext(Fraction(s, r), N)
    coeffs = {m: (-x) ** m * power_sum(m, ctx) / m for m in range(1, dim + 1)}
    from .polys import exp_kappa_series

    factor = exp_kappa_series(coeffs, n, dim)
    rhs = _pair_with_factor(g, n, OmegaSpec(r, s, a, x), factor, basis)
    return _compare_pairings(
        "multi_shift_s", {"g": g, "n": n, "r": r, "s": s, "a": a, "N": N, "x": x}, lhs, rhs
    )


def check_shift_a(g: int, n: int, r: int, s: int, a: tuple[int, ...], i: int, x) -> CheckReport:
    """Omega(r, s; .., a_i + r, ..) = Omega(r, s; a) * (1 + x a_i/r psi_i)."""
    x = Fraction(x)
    dim = 3 * g - 3 + n
    basis = flat_basis(g, n)
    a2 = a[: i - 1] + (a[i - 1] + r,) + a[i:]
    lhs = omega_pairings(g, n, OmegaSpec(r, s, a2, x), basis)
    factor = _one(n, dim) + TautPolynomial.psi(i, n, dim).scale(x * Fraction(a[i - 1], r))
    rhs = _pair_with_factor(g, n, OmegaSpec(r, s, a, x), factor, basis)
    return _compare_pairings(
        "shift_a", {"g": g, "n": n, "r": r, "s": s, "a": a, "i": i, "x": x}, lhs, rhs
    )


def check_multi_shift_a(
    g: int, n: int, r: int, s: int, a: tuple[int, ...], i: int, N: int, x
) -> CheckReport:
    """Omega(r, s; .., a_i + Nr, ..) = Omega(r, s; a) * prod_t (1 + x(a_i/r + t) psi_i)."""
    x = Fraction(x)
    dim = 3 * g - 3 + n
    basis = flat_basis(g, n)
    a2 = a[: i - 1] + (a[i - 1] + N * r,) + a[i:]
    lhs = omega_pairings(g, n, OmegaSpec(r, s, a2, x), basis)
    factor = _one(n, dim)
    for t in range(N):
        factor = factor * (
            _one(n, dim) + TautPolynomial.psi(i, n, dim).scale(x * (Fraction(a[i - 1], r) + t))
        )
    rhs = _pair_with_factor(g, n, OmegaSpec(r, s, a, x), factor, basis)
    return _compare_pairings(
        "multi_shift_a",
        {"g": g, "n": n, "r": r, "s": s, "a": a, "i": i, "N": N, "x": x},
        lhs,
        rhs,
    )


def check_zero_r_symmetry(g: int, n: int, r: int, a: tuple[int, ...]) -> CheckReport:
    """Omega(r, 0; a) = Omega(r, r; a), plus the leaf version 0 <-> r."""
    basis = flat_basis(g, n)
    lhs = omega_pairings(g, n, OmegaSpec(r, 0, a), basis)
    rhs = omega_pairings(g, n, OmegaSpec(r, r, a), basis)
    rep = _compare_pairings("zero_r_symmetry", {"g": g, "n": n, "r": r, "a": a}, lhs, rhs)
    if rep.passed:
        for i, ai in enumerate(a):
            if ai % r == 0:
                a2 = a[:i] + (ai + r if ai == 0 else ai - r,) + a[i + 1 :]
                alt = omega_pairings(g, n, OmegaSpec(r, 0, a2), basis)
                leaf = _compare_pairings(
                    "zero_r_symmetry_leaf", {"g": g, "n": n, "r": r, "a": a, "i": i + 1}, lhs, alt
                )
                if not leaf.passed:
                    return leaf
                break
    return rep


def check_pullback(g: int, n: int, r: int, s: int, a: tuple[int, ...], x=1) -> CheckReport:
    """Consequences of Omega(r,s;a,s) = pi^* Omega(r,s;a).

    (a) the full integral of the pulled-back class vanishes;
    (b) int_{g,n+1} Omega(..,s) psi_{n+1}^{k+1} prod psi^d equals
        int_{g,n} Omega * kappa_k prod psi^d for k <= 2 (kappa_0 = 2g-2+n).
    """
    x = Fraction(x)
    dim1 = 3 * g - 2 + n
    a1 = a + (s,)
    details: list[str] = []
    total = omega_integral(g, n + 1, OmegaSpec(r, s, a1, x))
    if total != 0:
        details.append(f"int Omega(..., s) = {total} != 0")
    cases = [
        (k, d) for k in range(0, 3) for d in _psi_upto(n, dim1 - k - 1)
    ]
    up = omega_pairings(
        g, n + 1, OmegaSpec(r, s, a1, x), [((), d + (k + 1,)) for k, d in cases]
    )
    down = omega_pairings(
        g,
        n,
        OmegaSpec(r, s, a, x),
        [((), d) if k == 0 else (((k, 1),), d) for k, d in cases],
    )
    for k, d in cases:
        lhs = up[((), d + (k + 1,))]
        if k == 0:
            rhs = (2 * g - 2 + n) * down[((), d)]
        else:
            rhs = down[(((k, 1),), d)]
        if lhs != rhs:
            details.append(f"k={k} d={d}: lhs={lhs} rhs={rhs}")
    return CheckReport(
        check="pullback",
        parameters={"g": g, "n": n, "r": r, "s": s, "a": a, "x": x},
        expected="pullback consequences (vanishing and kappa transport)",
        got="hold" if not details else details[0],
        passed=not details,
        details=details[:5],
    )


def check_string(g: int, n: int, r: int, s: int, a: tuple[int, ...], x=1) -> CheckReport:
    """String equation: <Omega(a,s) prod psi^d>_{g,n+1} = sum_j <Omega(a) psi^{d-e_j}>_{g,n}
    coefficientwise in the formal leg weights, up to total degree dim+1."""
    x = Fraction(x)
    dim1 = 3 * g - 2 + n
    a1 = a + (s,)
    spec1 = OmegaSpec(r, s, a1, x)
    spec0 = OmegaSpec(r, s, a, x)
    details = []
    ds = list(_psi_upto(n, dim1 + 1))
    up = omega_pairings(g, n + 1, spec1, [((), d + (0,)) for d in ds if sum(d) <= dim1])
    down = omega_pairings(g, n, spec0, [((), d) for d in _psi_upto(n, dim1)])
    for d in ds:
        lhs = up[((), d + (0,))] if sum(d) <= dim1 else Fraction(0)
        rhs = Fraction(0)
        for j in range(n):
            if d[j] >= 1:
                rhs += down[((), d[:j] + (d[j] - 1,) + d[j + 1 :])]
        if lhs != rhs:
            details.append(f"d={d}: lhs={lhs} rhs={rhs}")
    return CheckReport(
        check="string",
        parameters={"g": g, "n": n, "r": r, "s": s, "a": a, "x": x},
        expected="string equation coefficientwise",
        got="holds" if not details else details[0],
        passed=not details,
        details=details[:5],
    )


def check_dilaton(g: int, n: int, r: int, s: int, a: tuple[int, ...], x=1) -> CheckReport:
    """Dilaton equation: <Omega(a,s) psi_{n+1} prod psi^d> = (2g-2+n) <Omega(a) prod psi^d>."""
    x = Fraction(x)
    dim1 = 3 * g - 2 + n
    a1 = a + (s,)
    spec1 = OmegaSpec(r, s, a1, x)
    spec0 = OmegaSpec(r, s, a, x)
    details = []
    ds = list(_psi_upto(n, dim1))
    up = omega_pairings(g, n + 1, spec1, [((), d + (1,)) for d in ds])
    down = omega_pairings(g, n, spec0, [((), d) for d in ds])
    for d in ds:
        lhs = up[((), d + (1,))]
        rhs = (2 * g - 2 + n) * down[((), d)]
        if lhs != rhs:
            details.append(f"d={d}: lhs={lhs} rhs={rhs}")
    return CheckReport(
        check="dilaton",
        parameters={"g": g, "n": n, "r": r, "s": s, "a": a, "x": x},
        expected="dilaton equation coefficientwise",
        got="holds" if not details else details[0],
        passed=not details,
        details=details[:5],
    )


def check_vanishing_thm(g: int, n: int, r: int, s: int, a: tuple[int, ...], x=1) -> CheckReport:
    """int_{Mbar_{g,n+1}} Omega^{[x]}(r, s; a, s) = 0 for every integer s."""
    x = Fraction(x)
    val = omega_integral(g, n + 1, OmegaSpec(r, s, a + (s,), x))
    return CheckReport(
        check="vanishing_pullback_class",
        parameters={"g": g, "n": n, "r": r, "s": s, "a": a, "x": x},
        expected="0",
        got=str(val),
        passed=val == 0,
    )


def check_vanishing_corollary(g: int, n: int, r: int, s: int, a: tuple[int, ...], x=1) -> CheckReport:
    """The weighted-psi and kappa-exponential vanishings derived from the
    shift identities, with the generalised-Stirling cross-check of the
    psi-polynomial coefficients."""
    x = Fraction(x)
    if 0 <= s < r:
        return CheckReport(
            check="vanishing_corollary",
            parameters={"g": g, "n": n, "r": r, "s": s, "a": a, "x": x},
            expected="degenerate to the pullback-class vanishing",
            got="covered by vanishing_pullback_class",
            passed=check_vanishing_thm(g, n, r, s, a, x).passed,
        )
    dim1 = 3 * g - 2 + n
    q, rem = divmod(s, r)  # s = r*q + rem with 0 <= rem < r
    details: list[str] = []

    one = _one(n + 1, dim1)
    psi_last = TautPolynomial.psi(n + 1, n + 1, dim1)
    if s >= r:
        T1 = one
        for t in range(1, q + 1):
            T1 = T1 * (one + psi_last.scale(x * (Fraction(s, r) - t)))
        I1 = omega_integral(g, n + 1, OmegaSpec(r, s, a + (rem,), x), T1)
        if I1 != 0:
            details.append(f"product form: {I1}")
        ctx = SymmetricEvalContext(Fraction(rem, r), q)
        coeffs = {m: ((-1) ** m) * power_sum(m, ctx) * x ** m / m for m in range(1, dim1 + 1)}
        from .polys import exp_kappa_series

        T2 = exp_kappa_series(coeffs, n + 1, dim1)
        I2 = omega_integral(g, n + 1, OmegaSpec(r, rem, a + (s,), x), T2)
        if I2 != 0:
            details.append(f"kappa-exponential form: {I2}")
        # Stirling reformulation of the product polynomial at x = 1
        probe = one
        for t in range(1, q + 1):
            probe = probe * (one + psi_last.scale(Fraction(s, r) - t))
        for m in range(q + 1):
            want = stirling_generalized_first(q, m, Fraction(rem, r))
            mono = ((), (0,) * n + (m,))
            gotc = probe.terms.get(mono, Fraction(0))
            if gotc != want:
                details.append(f"stirling first k={q} m={m}: poly {gotc} vs {want}")
    else:  # s < 0
        N = -q
        T1 = one
        for t in range(0, N):
            T1 = T1 * (one + psi_last.scale(x * (Fraction(s, r) + t)))
        T1 = T1.inverse()
        I1 = omega_integral(g, n + 1, OmegaSpec(r, s, a + (rem,), x), T1)
        if I1 != 0:
            details.append(f"inverse-product form: {I1}")
        ctx = SymmetricEvalContext(Fraction(s, r), N)
        coeffs = {m: -((-1) ** m) * power_sum(m, ctx) * x ** m / m for m in range(1, dim1 + 1)}
        from .polys import exp_kappa_series

        T2 = exp_kappa_series(coeffs, n + 1, dim1)
        I2 = omega_integral(g, n + 1, OmegaSpec(r, rem, a + (s,), x), T2)
        if I2 != 0:
            details.append(f"kappa-exponential form: {I2}")
        probe = one
        for t in range(0, N):
            probe = probe * (one + psi_last.scale(Fraction(s, r) + t))
        probe = probe.inverse()
        for m in range(dim1 + 1):
            want = stirling_generalized_second(N, m, Fraction(rem, r))
            mono = ((), (0,) * n + (m,))
            gotc = probe.terms.get(mono, Fraction(0))
            if gotc != want:
                details.append(f"stirling second k={N} m={m}: poly {gotc} vs {want}")
    return CheckReport(
        check="vanishing_corollary",
        parameters={"g": g, "n": n, "r": r, "s": s, "a": a, "x": x},
        expected="both weighted integrals vanish; Stirling coefficients match",
        got="hold" if not details else details[0],
        passed=not details,
        details=details[:5],
    )


def check_segre_chern(g: int, n: int, s: int, x) -> CheckReport:
    """For r = 1: Omega^{[-x]}(1, 1-s; 0) * Omega^{[x]}(1, s; 0) pairs like 1.

    Both factors are used in their closed forms Lambda(+-x)^{-1} * exp(kappa
    series); the lambda parts multiply out to arbitrary lambda monomials, so
    no total-Chern-class relation is assumed.
    """
    x = Fraction(x)
    dim = 3 * g - 3 + n
    from .hodge import hodge_pair, lambda_dict_mul

    lamA, polyA = omega_r1_parts(g, n, 1 - s, (0,) * n, -x, dim)
    lamB, polyB = omega_r1_parts(g, n, s, (0,) * n, x, dim)
    lam = lambda_dict_mul(lamA, lamB, dim)
    poly = polyA * polyB
    details = []
    for mono in flat_basis(g, n):
        kap, psi = mono
        shifted = poly.mul_monomial(kap, {i + 1: d for i, d in enumerate(psi) if d})
        got = hodge_pair(g, n, lam, shifted)
        want = integrate_monomial(g, n, kap, psi)
        if got != want:
            details.append(f"pairing {mono}: product {got} vs unit {want}")
    return CheckReport(
        check="segre_chern_r1",
        parameters={"g": g, "n": n, "s": s, "x": x},
        expected="product of the two parametrisations pairs like 1",
        got="holds" if not details else details[0],
        passed=not details,
        details=details[:5],
    )


def check_counterexample_footnote(xs: Iterable = (1, 2, Fraction(1, 2))) -> CheckReport:
    """On Mbar_{1,2}: Omega^{[x]}(2,1;0,2) * Omega^{[-x]}(2,1;2,0) pairs like
    c^2 - (3/4) x^2 kappa_2 with c = r^{2g-1} = 2 the covering degree carried
    by the degree-0 part of each factor; in particular the product is NOT the
    class naive Serre duality would give (c^2 times the unit), the correction
    being exactly the advertised -(3/4) x^2 kappa_2.

    The degree-1 pieces of both factors are reconstructed exactly in the
    basis {psi_1, kappa_1} of H^2(Mbar_{1,2}; Q) (rank 2), which turns the
    single cross term of the product into a monomial computation.  The
    degree-1 part of the product pairs to zero throughout (the odd-degree
    vanishing observation).
    """
    g, n = 1, 2
    c0 = Fraction(2)  # r^{2g-1} for r = 2, g = 1
    details: list[str] = []
    duality_failed_everywhere = True
    deg1 = [(((1, 1),), (0, 0)), ((), (1, 0)), ((), (0, 1))]
    deg2 = [m for m in flat_basis(g, n) if monomial_degree(m) == 2]
    psi1 = ((), (1, 0))
    kap1 = (((1, 1),), (0, 0))
    gram = {
        (p, q): integrate_monomial(g, n, *_mono_product(p, q)) for p in (psi1, kap1) for q in (psi1, kap1)
    }
    det = gram[(psi1, psi1)] * gram[(kap1, kap1)] - gram[(psi1, kap1)] * gram[(kap1, psi1)]
    assert det != 0

    for x in xs:
        x = Fraction(x)
        specA = OmegaSpec(2, 1, (0, 2), x)
        specB = OmegaSpec(2, 1, (2, 0), -x)
        pairsA = omega_pairings(g, n, specA, flat_basis(g, n))
        pairsB = omega_pairings(g, n, specB, flat_basis(g, n))

        # the degree-0 parts are the covering degree
        top = ((), (2, 0))
        top_int = integrate_monomial(g, n, *top)
        for name, pairs in (("A", pairsA), ("B", pairsB)):
            if pairs[top] != c0 * top_int:
                details.append(f"x={x}: degree-0 part of {name} is not {c0}")

        recon = {}
        for name, pairs in (("A", pairsA), ("B", pairsB)):
            b1, b2 = pairs[psi1], pairs[kap1]
            alpha = (b1 * gram[(kap1, kap1)] - b2 * gram[(psi1, kap1)]) / det
            beta = (b2 * gram[(psi1, psi1)] - b1 * gram[(kap1, psi1)]) / det
            # consistency of the reconstruction against the remaining pairing
            other = ((), (0, 1))
            pred = alpha * integrate_monomial(g, n, *_mono_product(psi1, other)) + beta * integrate_monomial(
                g, n, *_mono_product(kap1, other)
            )
            if pred != pairs[other]:
                details.append(f"x={x}: degree-1 reconstruction of {name} inconsistent")
            recon[name] = (alpha, beta)

        aA, bA = recon["A"]
        aB, bB = recon["B"]
        cross = (
            aA * aB * gram[(psi1, psi1)]
            + (aA * bB + bA * aB) * gram[(psi1, kap1)]
            + bA * bB * gram[(kap1, kap1)]
        )
        kappa2_int = integrate_monomial(g, n, ((2, 1),), (0, 0))
        # pairing of the product against T = 1: A2*B0 + A1*B1 + A0*B2
        got_deg0 = c0 * pairsA[((), (0, 0))] + c0 * pairsB[((), (0, 0))] + cross
        want_deg0 = -Fraction(3, 4) * x ** 2 * kappa2_int
        if got_deg0 != want_deg0:
            details.append(f"x={x}: product vs -(3/4)x^2*k2 at T=1: {got_deg0} vs {want_deg0}")
        if got_deg0 == 0:
            duality_failed_everywhere = False
        # degree-1 part of the product: c0*(A1 + B1), must pair to zero
        for m in deg1:
            odd = c0 * (pairsA[m] + pairsB[m])
            if odd != 0:
                details.append(f"x={x}: odd-degree part pairs to {odd} against {m}")
        # degree-2 test classes meet the degree-0 part c0^2 of the product
        for m in deg2:
            if c0 * c0 * integrate_monomial(g, n, *m) != c0 * pairsA[m]:
                details.append(f"x={x}: degree-0 normalisation broken against {m}")
    return CheckReport(
        check="counterexample_footnote",
        parameters={"g": g, "n": n, "x": tuple(str(Fraction(x)) for x in xs), "deg0": str(c0)},
        expected="product pairs like c^2 - 3/4*x^2*k2 (c = 2); naive duality form fails",
        got=(
            "confirmed" if not details and duality_failed_everywhere else
            (details[0] if details else "kappa_2 correction vanished: duality did NOT fail")
        ),
        passed=not details and duality_failed_everywhere,
        details=details[:5],
    )


def _mono_product(p: Monomial, q: Monomial) -> tuple:
    kd = dict(p[0])
    for m, e in q[0]:
        kd[m] = kd.get(m, 0) + e
    return tuple(sorted(kd.items())), tuple(a + b for a, b in zip(p[1], q[1]))


# -- grid runner -------------------------------------------------------------------


@dataclass(frozen=True)
class CheckGrid:
    """Parameter grid for the identity suite."""

    max_dim: int = 4
    max_r: int = 3
    s_values: tuple[int, ...] = tuple(range(-3, 5))
    x_values: tuple = (Fraction(1), Fraction(-1), Fraction(1, 2))

    def spaces(self) -> list[tuple[int, int]]:
        out = []
        for g in range(0, self.max_dim // 3 + 2):
            for n in range(0, self.max_dim + 4):
                if is_stable(g, n) and 3 * g - 3 + n <= self.max_dim:
                    out.append((g, n))
        return sorted(out)


SMALL_GRID = CheckGrid(max_dim=2, max_r=2, s_values=(-2, -1, 0, 1, 2), x_values=(Fraction(1), Fraction(-1)))
FULL_GRID = CheckGrid()


def admissible_a(g: int, n: int, r: int, s: int) -> tuple[int, ...]:
    """A canonical a-vector in 1..r satisfying the modular constraint."""
    if n == 0:
        if (2 * g - 2) * s % r != 0:
            return ()
        return ()
    base = [r] * n
    need = ((2 * g - 2 + n) * s - sum(base)) % r
    # adjust the first entry within 1..r when possible, else walk entries
    for first in range(1, r + 1):
        cand = [first] + base[1:]
        if (sum(cand) - (2 * g - 2 + n) * s) % r == 0:
            return tuple(cand)
    raise AssertionError("unreachable: some residue always works")


def iter_suite(grid: CheckGrid) -> Iterator[CheckReport]:
    """Run every identity check over the grid, yielding reports."""
    for g, n in grid.spaces():
        for r in range(1, grid.max_r + 1):
            for s in grid.s_values:
                if n == 0 and (2 * g - 2) * s % r != 0:
                    continue
                a = admissible_a(g, n, r, s)
                for x in grid.x_values:
                    yield check_shift_s(g, n, r, s, a, x)
                    for N in (2, 3):
                        yield check_multi_shift_s(g, n, r, s, a, N, x)
                    if n >= 1:
                        yield check_shift_a(g, n, r, s, a, 1, x)
                        yield check_multi_shift_a(g, n, r, s, a, 1, 2, x)
                    yield check_pullback(g, n, r, s, a, x)
                    yield check_string(g, n, r, s, a, x)
                    yield check_dilaton(g, n, r, s, a, x)
                    yield check_vanishing_thm(g, n, r, s, a, x)
                    yield check_vanishing_corollary(g, n, r, s, a, x)
            a0 = admissible_a(g, n, r, 0)
            yield check_zero_r_symmetry(g, n, r, a0)
        for s in grid.s_values:
            for x in grid.x_values:
                yield check_segre_chern(g, n, s, x)
    yield check_counterexample_footnote()


def run_suite(grid: CheckGrid = SMALL_GRID) -> list[CheckReport]:
    return list(iter_suite(grid))
