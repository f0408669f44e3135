"""Exact scalar layer: Bernoulli numbers and polynomials, symmetric functions
over arithmetic progressions, and generalised Stirling numbers.

Every function returns a `fractions.Fraction`; nothing here ever rounds.
Sign convention, fixed once for the whole package: B_1 = -1/2, i.e. B_m is
the coefficient of t^m/m! in t*e^{tx}/(e^t - 1) evaluated at x = 0.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

Rat = Fraction

_bern: list[Fraction] = [Fraction(1)]
_bern_lock = threading.Lock()


def bernoulli_number(m: int) -> Fraction:
    """B_m with B_1 = -1/2, by the recurrence sum_{k<=m} C(m+1,k) B_k = 0."""
    if m < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if m >= len(_bern):
        with _bern_lock:
            while len(_bern) <= m:
                j = len(_bern)
                acc = sum(comb(j + 1, k) * _bern[k] for k in range(j))
                _bern.append(Fraction(-acc, j + 1))
    return _bern[m]


@lru_cache(maxsize=None)
def bernoulli_poly(m: int, x: Rat) -> Fraction:
    """B_m(x) = sum_k C(m,k) B_k x^{m-k}, exact at any rational x."""
    if m < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    x = Fraction(x)
    acc = Fraction(0)
    xpow = Fraction(1)
    for k in range(m, -1, -1):
        acc += comb(m, k) * bernoulli_number(k) * xpow
        xpow *= x
    return acc


def binomial_ext(a: Rat, i: int) -> Fraction:
    """C(a, i) = a(a-1)...(a-i+1)/i! for arbitrary rational a, i >= 0."""
    if i < 0:
        raise ValueError("lower binomial index must be nonnegative")
    num = Fraction(1)
    a = Fraction(a)
    for t in range(i):
        num *= a - t
    for t in range(1, i + 1):
        num /= t
    return num


@dataclass(frozen=True)
class SymmetricEvalContext:
    """Variable set (base, base+1, ..., base+count-1) for symmetric functions.

    count = 0 gives the empty conventions: sigma_0 = h_0 = 1 and p_m = 0.
    """

    base: Rat
    count: int

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("count must be nonnegative")
        object.__setattr__(self, "base", Fraction(self.base))

    def variables(self) -> list[Fraction]:
        return [self.base + t for t in range(self.count)]


def power_sum(m: int, ctx: SymmetricEvalContext) -> Fraction:
    """p_m = sum_i X_i^m over the progression; 0 on the empty set."""
    if m < 1:
        raise ValueError("power sum degree must be positive")
    return sum((v ** m for v in ctx.variables()), Fraction(0))


def elementary_symmetric(l: int, ctx: SymmetricEvalContext) -> Fraction:
    """sigma_l, read off from the product prod_i (1 + X_i u)."""
    if l < 0:
        raise ValueError("degree must be nonnegative")
    coeffs = [Fraction(1)] + [Fraction(0)] * l
    for v in ctx.variables():
        for k in range(min(l, len(coeffs) - 1), 0, -1):
            coeffs[k] += v * coeffs[k - 1]
    return coeffs[l]


def complete_homogeneous(l: int, ctx: SymmetricEvalContext) -> Fraction:
    """h_l, read off from the series prod_i 1/(1 - X_i u)."""
    if l < 0:
        raise ValueError("degree must be nonnegative")
    coeffs = [Fraction(1)] + [Fraction(0)] * l
    for v in ctx.variables():
        # multiply by 1/(1 - v u) = sum_k v^k u^k, truncated at u^l
        for k in range(1, l + 1):
            coeffs[k] += v * coeffs[k - 1]
    return coeffs[l]


@lru_cache(maxsize=None)
def stirling_first(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind (cycle counts)."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return stirling_first(n - 1, k - 1) + (n - 1) * stirling_first(n - 1, k)


@lru_cache(maxsize=None)
def stirling_second(n: int, k: int) -> int:
    """Stirling number of the second kind (set partition counts)."""
    if n < 0 or k < 0:
        return 0
    if n == 0:
        return 1 if k == 0 else 0
    return stirling_second(n - 1, k - 1) + k * stirling_second(n - 1, k)


def stirling_generalized_first(k: int, m: int, x: Rat) -> Fraction:
    """(-1)^k s(k, k-m, x) = sum_i C(k+i-m, i) * c(k, k-m+i) * x^i.

    c is the unsigned first-kind Stirling number.  The value equals
    sigma_m(x, x+1, ..., x+k-1), i.e. the psi^m coefficient of
    prod_{t=1}^{k} (1 + (x + k - t) psi); the product-expansion oracle in the
    test suite pins this down.
    """
    if k < 0 or m < 0 or m > k:
        raise ValueError("need 0 <= m <= k")
    x = Fraction(x)
    acc = Fraction(0)
    xpow = Fraction(1)
    for i in range(m + 1):
        acc += binomial_ext(k + i - m, i) * stirling_first(k, k - m + i) * xpow
        xpow *= x
    return acc


def interpolate_polynomial(points: list[tuple[Rat, Rat]]) -> list[Fraction]:
    """Coefficients (low to high) of the unique polynomial of degree < len(points)
    through the given points, by exact Gaussian elimination."""
    n = len(points)
    rows = []
    for x, y in points:
        x = Fraction(x)
        row = [Fraction(1)]
        for _ in range(n - 1):
            row.append(row[-1] * x)
        rows.append(row + [Fraction(y)])
    for col in range(n):
        piv = next(r for r in range(col, n) if rows[r][col] != 0)
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = rows[col][col]
        rows[col] = [v / inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
    return [rows[i][n] for i in range(n)]


def stirling_generalized_second(k: int, m: int, x: Rat) -> Fraction:
    """S(-k+m, -k, x) = sum_i C(m+k-1, i) (-1)^i S2(m-i+k, k) x^i.

    Here k >= 0 is the magnitude of the (negative) index appearing in the
    vanishing statements for s < 0; the value equals
    h_m(1-x, 2-x, ..., k-x), the psi^m coefficient of
    prod_{t=1}^{k} (1 + (x - t) psi)^{-1}.
    """
    if k < 0 or m < 0:
        raise ValueError("need k >= 0 and m >= 0")
    x = Fraction(x)
    acc = Fraction(0)
    xpow = Fraction(1)
    for i in range(m + 1):
        acc += (
            binomial_ext(m + k - 1, i)
            * ((-1) ** i)
            * stirling_second(m - i + k, k)
            * xpow
        )
        xpow *= x
    return acc
