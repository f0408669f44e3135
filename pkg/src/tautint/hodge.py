"""Hodge integrals: lambda-class monomials paired with kappa/psi classes.

The largest lambda index is peeled off with Newton's identity
k*c_k = sum_m (-1)^{m-1} c_{k-m} p_m applied to the Hodge bundle, whose power
sums p_m = m! ch_m expand into kappa_m, psi^m and boundary pushforwards with
Bernoulli-number coefficients (odd Bernoulli vanishing kills every even
m >= 2).  Boundary terms restrict lambda classes to the glued spaces (the
total Chern class restricts to the product over components, the
nonseparating side losing one rank), so the recursion closes over tuples
(g, n, lambda multiset, kappa monomial, psi exponents).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from math import comb

from .exact import Rat, bernoulli_number
from .intersect import _added_point_terms, integrate_monomial
from .polys import KappaPart, PsiPart, TautPolynomial, monomial_degree
from .psi import is_stable

LambdaPart = tuple[int, ...]  # sorted descending, indices >= 1
LambdaDict = dict[LambdaPart, Fraction]


def hodge_monomial(g: int, n: int, lambdas, kappa: KappaPart = (), psi: PsiPart = ()) -> Fraction:
    """int_{Mbar_{g,n}} prod lambda_a * prod kappa_m^e * prod psi_i^{d_i}."""
    lambdas = tuple(sorted(lambdas, reverse=True))
    psi = tuple(psi)
    if len(psi) != n:
        raise ValueError("psi exponent vector must have length n")
    if any(a < 1 for a in lambdas):
        raise ValueError("lambda indices start at 1")
    return _hodge_core(g, n, lambdas, tuple(sorted(kappa)), tuple(sorted(psi, reverse=True)))


@lru_cache(maxsize=None)
def _hodge_core(g: int, n: int, lambdas: LambdaPart, kappa: KappaPart, psi: PsiPart) -> Fraction:
    if not is_stable(g, n):
        raise ValueError(f"unstable moduli space (g={g}, n={n})")
    if any(a > g for a in lambdas):
        return Fraction(0)
    dim = 3 * g - 3 + n
    if sum(lambdas) + monomial_degree((kappa, psi)) != dim:
        return Fraction(0)
    if not lambdas:
        return integrate_monomial(g, n, kappa, psi)
    if kappa:
        acc = Fraction(0)
        for coef, mu in _added_point_terms(kappa):
            acc += coef * hodge_monomial(
                g, n + len(mu), lambdas, (), psi + tuple(m + 1 for m in mu)
            )
        return acc

    k = lambdas[0]
    rest = lambdas[1:]
    acc = Fraction(0)
    for m in range(1, k + 1):
        bval = bernoulli_number(m + 1)
        if bval == 0:
            continue
        coef = Fraction((-1) ** (m - 1), k) * bval / (m + 1)
        sub = rest if m == k else rest + (k - m,)

        term = hodge_monomial(g, n, sub, ((m, 1),), psi)
        seen_bump: set[int] = set()
        for i in range(n):
            if psi[i] in seen_bump:
                continue  # symmetric in equal exponents
            seen_bump.add(psi[i])
            mult = psi.count(psi[i])
            bumped = psi[:i] + (psi[i] + m,) + psi[i + 1 :]
            term -= mult * hodge_monomial(g, n, sub, (), bumped)
        term += Fraction(1, 2) * _boundary_terms(g, n, sub, psi, m)
        acc += coef * term
    return acc


def _boundary_terms(g: int, n: int, lambdas: LambdaPart, psi: PsiPart, m: int) -> Fraction:
    """Pushforward part of p_m: sum_{i+j=m-1} psi'^i (-psi'')^j over the
    one-edge degenerations (nonseparating plus all ordered separating splits)."""
    acc = Fraction(0)
    if g >= 1 and is_stable(g - 1, n + 2):
        for i in range(m):
            j = m - 1 - i
            acc += ((-1) ** j) * hodge_monomial(g - 1, n + 2, lambdas, (), psi + (i, j))
    for g1 in range(g + 1):
        g2 = g - g1
        for left, right, ways in _psi_splits(psi):
            if not (is_stable(g1, len(left) + 1) and is_stable(g2, len(right) + 1)):
                continue
            for lam1, lam2 in _lambda_splits(lambdas):
                if sum(lam1) > 3 * g1 - 2 + len(left) or sum(lam2) > 3 * g2 - 2 + len(right):
                    continue
                for i in range(m):
                    j = m - 1 - i
                    acc += (
                        ways
                        * ((-1) ** j)
                        * hodge_monomial(g1, len(left) + 1, lam1, (), left + (i,))
                        * hodge_monomial(g2, len(right) + 1, lam2, (), right + (j,))
                    )
    return acc


@lru_cache(maxsize=None)
def _psi_splits(psi: PsiPart) -> tuple[tuple[PsiPart, PsiPart, int], ...]:
    """Ways to send the marked points to the two sides of a separating node,
    grouped by the resulting exponent multisets with their multiplicities."""
    counts = sorted(Counter(psi).items())
    out: list[tuple[PsiPart, PsiPart, int]] = []
    ranges = [range(c + 1) for _, c in counts]
    for picks in iproduct(*ranges):
        ways = 1
        left: list[int] = []
        right: list[int] = []
        for (val, c), take in zip(counts, picks):
            ways *= comb(c, take)
            left += [val] * take
            right += [val] * (c - take)
        out.append(
            (tuple(sorted(left, reverse=True)), tuple(sorted(right, reverse=True)), ways)
        )
    return tuple(out)


@lru_cache(maxsize=None)
def _lambda_splits(lambdas: LambdaPart) -> tuple[tuple[LambdaPart, LambdaPart], ...]:
    """All ways to write each lambda_a as lambda_p (x) lambda_q with p+q=a."""
    if not lambdas:
        return (((), ()),)
    head, tail = lambdas[0], lambdas[1:]
    out = []
    for l1, l2 in _lambda_splits(tail):
        for p in range(head + 1):
            q = head - p
            n1 = tuple(sorted(l1 + ((p,) if p else ()), reverse=True))
            n2 = tuple(sorted(l2 + ((q,) if q else ()), reverse=True))
            out.append((n1, n2))
    return tuple(out)


def hodge_pair(g: int, n: int, lam: LambdaDict, p: TautPolynomial) -> Fraction:
    """Pair a lambda-polynomial (dict lambda-tuple -> coeff) with a kappa/psi
    polynomial: sum of hodge_monomial over all products of terms."""
    if p.n_points != n:
        raise ValueError("polynomial has wrong number of marked points")
    acc = Fraction(0)
    for ltuple, lc in lam.items():
        if lc == 0:
            continue
        for (kappa, psi), c in p.terms.items():
            acc += lc * c * hodge_monomial(g, n, ltuple, kappa, psi)
    return acc


def hodge_integral(g: int, n: int, i: int, p: TautPolynomial) -> Fraction:
    """int lambda_i * p over Mbar_{g,n} (i = 0 gives a plain mixed integral)."""
    if i == 0:
        return hodge_pair(g, n, {(): Fraction(1)}, p)
    return hodge_pair(g, n, {(i,): Fraction(1)}, p)


# -- lambda-series helpers -----------------------------------------------------


def lambda_dict_mul(a: LambdaDict, b: LambdaDict, maxdeg: int) -> LambdaDict:
    out: LambdaDict = {}
    for la, ca in a.items():
        for lb, cb in b.items():
            if sum(la) + sum(lb) > maxdeg:
                continue
            key = tuple(sorted(la + lb, reverse=True))
            v = out.get(key, Fraction(0)) + ca * cb
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
    return out


def lambda_total(t: Rat, g: int, maxdeg: int) -> LambdaDict:
    """The total Chern polynomial sum_i lambda_i t^i up to rank g."""
    t = Fraction(t)
    out: LambdaDict = {(): Fraction(1)}
    tp = Fraction(1)
    for i in range(1, min(g, maxdeg) + 1):
        tp *= t
        if tp != 0:
            out[(i,)] = tp
    return out


def lambda_total_inverse(t: Rat, g: int, maxdeg: int) -> LambdaDict:
    """(sum_i lambda_i t^i)^{-1} as a lambda-polynomial of degree <= maxdeg."""
    u = lambda_total(t, g, maxdeg)
    u = {k: -v for k, v in u.items() if k != ()}
    out: LambdaDict = {(): Fraction(1)}
    power: LambdaDict = {(): Fraction(1)}
    for _ in range(maxdeg):
        power = lambda_dict_mul(power, u, maxdeg)
        if not power:
            break
        for k, v in power.items():
            nv = out.get(k, Fraction(0)) + v
            if nv == 0:
                out.pop(k, None)
            else:
                out[k] = nv
    return out
