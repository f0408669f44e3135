"""Truncated polynomial algebra in kappa_m and per-point psi_i classes.

A monomial is a pair (kappa, psi): `kappa` is a tuple of (index, exponent)
pairs sorted by index, `psi` a tuple of n nonnegative exponents.  Its degree
is sum(m*e) + sum(psi).  Polynomials store Fraction coefficients in a dict
and re-truncate eagerly above `trunc`; monomials with zero coefficient are
never kept.  kappa_0 is deliberately excluded: where it is needed it is the
scalar 2g-2+n and is substituted at the use site.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

from .exact import Rat, bernoulli_poly

KappaPart = tuple[tuple[int, int], ...]
PsiPart = tuple[int, ...]
Monomial = tuple[KappaPart, PsiPart]


class TautMonomial(NamedTuple):
    kappa: KappaPart
    psi: PsiPart

    def degree(self) -> int:
        return monomial_degree((self.kappa, self.psi))


def monomial_degree(mono: Monomial) -> int:
    kappa, psi = mono
    return sum(m * e for m, e in kappa) + sum(psi)


def _merge_kappa(a: KappaPart, b: KappaPart) -> KappaPart:
    d: dict[int, int] = dict(a)
    for m, e in b:
        d[m] = d.get(m, 0) + e
    return tuple(sorted(d.items()))


class TautPolynomial:
    """Element of the truncated kappa/psi ring on `n_points` marked points."""

    __slots__ = ("n_points", "trunc", "terms")

    def __init__(self, n_points: int, trunc: int, terms: dict[Monomial, Fraction] | None = None):
        if n_points < 0 or trunc < 0:
            raise ValueError("n_points and trunc must be nonnegative")
        self.n_points = n_points
        self.trunc = trunc
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                self._add_term(mono, c)

    # -- construction ------------------------------------------------------

    @staticmethod
    def zero(n_points: int, trunc: int) -> TautPolynomial:
        return TautPolynomial(n_points, trunc)

    @staticmethod
    def one(n_points: int, trunc: int) -> TautPolynomial:
        return TautPolynomial(n_points, trunc, {((), (0,) * n_points): Fraction(1)})

    @staticmethod
    def const(n_points: int, trunc: int, c: Rat) -> TautPolynomial:
        return TautPolynomial(n_points, trunc, {((), (0,) * n_points): Fraction(c)})

    @staticmethod
    def kappa(m: int, n_points: int, trunc: int) -> TautPolynomial:
        if m < 1:
            raise ValueError("kappa index must be >= 1 (kappa_0 is a scalar)")
        return TautPolynomial(n_points, trunc, {(((m, 1),), (0,) * n_points): Fraction(1)})

    @staticmethod
    def psi(i: int, n_points: int, trunc: int, power: int = 1) -> TautPolynomial:
        if not 1 <= i <= n_points:
            raise ValueError("psi point index out of range")
        e = [0] * n_points
        e[i - 1] = power
        return TautPolynomial(n_points, trunc, {((), tuple(e)): Fraction(1)})

    @staticmethod
    def from_monomial(n_points: int, trunc: int, kappa: KappaPart, psi: PsiPart, c: Rat = 1) -> TautPolynomial:
        return TautPolynomial(n_points, trunc, {(tuple(sorted(kappa)), tuple(psi)): Fraction(c)})

    # -- basic ring structure ----------------------------------------------

    def _add_term(self, mono: Monomial, c: Fraction) -> None:
        if c == 0 or monomial_degree(mono) > self.trunc:
            return
        if len(mono[1]) != self.n_points:
            raise ValueError("psi exponent vector has wrong length")
        cur = self.terms.get(mono)
        new = c if cur is None else cur + c
        if new == 0:
            self.terms.pop(mono, None)
        else:
            self.terms[mono] = new

    def _check_compatible(self, other: TautPolynomial) -> None:
        if self.n_points != other.n_points or self.trunc != other.trunc:
            raise ValueError("mismatched n_points or truncation degree")

    def __add__(self, other: TautPolynomial) -> TautPolynomial:
        self._check_compatible(other)
        out = TautPolynomial(self.n_points, self.trunc, dict(self.terms))
        for mono, c in other.terms.items():
            out._add_term(mono, c)
        return out

    def __sub__(self, other: TautPolynomial) -> TautPolynomial:
        return self + other.scale(-1)

    def scale(self, c: Rat) -> TautPolynomial:
        c = Fraction(c)
        if c == 0:
            return TautPolynomial.zero(self.n_points, self.trunc)
        return TautPolynomial(
            self.n_points, self.trunc, {m: c * v for m, v in self.terms.items()}
        )

    def __mul__(self, other: TautPolynomial) -> TautPolynomial:
        self._check_compatible(other)
        out = TautPolynomial(self.n_points, self.trunc)
        for (ka, pa), ca in self.terms.items():
            da = sum(m * e for m, e in ka) + sum(pa)
            for (kb, pb), cb in other.terms.items():
                if da + sum(m * e for m, e in kb) + sum(pb) > self.trunc:
                    continue
                mono = (_merge_kappa(ka, kb), tuple(x + y for x, y in zip(pa, pb)))
                out._add_term(mono, ca * cb)
        return out

    def mul_monomial(self, kappa: KappaPart, psi_powers: dict[int, int], c: Rat = 1) -> TautPolynomial:
        """Multiply by c * prod kappa_m^e * prod psi_i^k (1-based point keys)."""
        extra = [0] * self.n_points
        for i, k in psi_powers.items():
            extra[i - 1] += k
        out = TautPolynomial(self.n_points, self.trunc)
        c = Fraction(c)
        for (ka, pa), ca in self.terms.items():
            mono = (_merge_kappa(ka, tuple(sorted(kappa))), tuple(x + y for x, y in zip(pa, extra)))
            out._add_term(mono, ca * c)
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TautPolynomial)
            and self.n_points == other.n_points
            and self.trunc == other.trunc
            and self.terms == other.terms
        )

    def __hash__(self) -> int:  # polynomials are value-like once built
        return hash((self.n_points, self.trunc, tuple(sorted(self.terms.items()))))

    # -- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> Fraction:
        return self.terms.get(((), (0,) * self.n_points), Fraction(0))

    def graded_part(self, k: int) -> TautPolynomial:
        return TautPolynomial(
            self.n_points,
            self.trunc,
            {m: c for m, c in self.terms.items() if monomial_degree(m) == k},
        )

    def max_degree(self) -> int:
        return max((monomial_degree(m) for m in self.terms), default=0)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0])))

    def retruncate(self, trunc: int) -> TautPolynomial:
        return TautPolynomial(self.n_points, trunc, dict(self.terms))

    # -- series helpers ------------------------------------------------------

    def exp(self) -> TautPolynomial:
        """exp of a polynomial with zero constant term."""
        if self.constant_term() != 0:
            raise ValueError("exp needs vanishing constant term")
        out = TautPolynomial.one(self.n_points, self.trunc)
        power = TautPolynomial.one(self.n_points, self.trunc)
        for k in range(1, self.trunc + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power.scale(Fraction(1, factorial(k)))
        return out

    def inverse(self) -> TautPolynomial:
        """Inverse of a polynomial with constant term 1 (Neumann series)."""
        if self.constant_term() != 1:
            raise ValueError("inverse needs constant term 1")
        u = TautPolynomial.one(self.n_points, self.trunc) - self
        out = TautPolynomial.one(self.n_points, self.trunc)
        power = TautPolynomial.one(self.n_points, self.trunc)
        for _ in range(self.trunc):
            power = power * u
            if power.is_zero():
                break
            out = out + power
        return out

    def render(self) -> str:
        """Canonical text form, e.g. "1 - 3/4*k2 + 1/2*k1*psi2^2"."""
        if not self.terms:
            return "0"
        parts: list[str] = []
        for mono, c in self.items():
            frag = _render_monomial(mono)
            mag = abs(c)
            if frag == "1":
                body = str(mag)
            elif mag == 1:
                body = frag
            else:
                body = f"{mag}*{frag}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"TautPolynomial(n={self.n_points}, trunc={self.trunc}, {self.render()})"


def _mono_key(mono: Monomial) -> tuple:
    return (mono[0], mono[1])


def _render_monomial(mono: Monomial) -> str:
    kappa, psi = mono
    frags = [f"k{m}" + (f"^{e}" if e > 1 else "") for m, e in kappa]
    frags += [
        f"psi{i + 1}" + (f"^{e}" if e > 1 else "")
        for i, e in enumerate(psi)
        if e > 0
    ]
    return "*".join(frags) if frags else "1"


def tp_add(a: TautPolynomial, b: TautPolynomial) -> TautPolynomial:
    return a + b


def tp_mul(a: TautPolynomial, b: TautPolynomial) -> TautPolynomial:
    return a * b


def tp_scale(a: TautPolynomial, c: Rat) -> TautPolynomial:
    return a.scale(c)


def exp_kappa_series(coeffs: dict[int, Rat], n_points: int, trunc: int) -> TautPolynomial:
    """exp(sum_m c_m kappa_m), truncated; constant term is 1."""
    lin = TautPolynomial.zero(n_points, trunc)
    for m, c in coeffs.items():
        if m < 1:
            raise ValueError("kappa indices start at 1")
        if m <= trunc and c != 0:
            lin = lin + TautPolynomial.kappa(m, n_points, trunc).scale(c)
    return lin.exp()


def exp_psi_series(i: int, coeffs: dict[int, Rat], n_points: int, trunc: int) -> TautPolynomial:
    """exp(sum_m c_m psi_i^m), truncated."""
    lin = TautPolynomial.zero(n_points, trunc)
    for m, c in coeffs.items():
        if m < 1:
            raise ValueError("psi powers start at 1")
        if m <= trunc and c != 0:
            lin = lin + TautPolynomial.psi(i, n_points, trunc, power=m).scale(c)
    return lin.exp()


def psi_geometric(i: int, weight: Rat, n_points: int, trunc: int) -> TautPolynomial:
    """sum_{k<=trunc} weight^k psi_i^k, the expansion of 1/(1 - weight*psi_i)."""
    weight = Fraction(weight)
    out = TautPolynomial.one(n_points, trunc)
    wpow = Fraction(1)
    for k in range(1, trunc + 1):
        wpow *= weight
        if wpow == 0:
            break
        out = out + TautPolynomial.psi(i, n_points, trunc, power=k).scale(wpow)
    return out


# -- bivariate half-edge series ---------------------------------------------

BivTerms = dict[tuple[int, int], Fraction]


@dataclass(frozen=True)
class EdgeSeries:
    """Polynomial in the two half-edge psi classes (psi', psi'')."""

    trunc: int
    terms: tuple[tuple[tuple[int, int], Fraction], ...]

    def as_dict(self) -> BivTerms:
        return dict(self.terms)


def _biv_mul(a: BivTerms, b: BivTerms, trunc: int) -> BivTerms:
    out: BivTerms = {}
    for (i, j), ca in a.items():
        for (k, l), cb in b.items():
            if i + k + j + l > trunc:
                continue
            key = (i + k, j + l)
            v = out.get(key, Fraction(0)) + ca * cb
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
    return out


def _biv_exp(a: BivTerms, trunc: int) -> BivTerms:
    out: BivTerms = {(0, 0): Fraction(1)}
    power: BivTerms = {(0, 0): Fraction(1)}
    for k in range(1, trunc + 1):
        power = _biv_mul(power, a, trunc)
        if not power:
            break
        inv = Fraction(1, factorial(k))
        for key, c in power.items():
            v = out.get(key, Fraction(0)) + inv * c
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
    return out


class EdgeDivisionError(ArithmeticError):
    """The edge numerator failed to divide by psi' + psi'' (a bug if raised)."""


@lru_cache(maxsize=None)
def edge_local_factor(w: int, r: int, x: Rat, trunc: int) -> EdgeSeries:
    """Edge factor of the stable-graph expansion at half-edge residue w.

    Computes N = 1 - exp(-sum_m (-x)^m B_{m+1}(w/r)/(m(m+1)) ((psi')^m - (-psi'')^m))
    exactly, checks divisibility by psi' + psi'', and returns N/(psi'+psi'')
    truncated to total degree `trunc`.
    """
    if not 0 <= w < r:
        raise ValueError("residue must lie in 0..r-1")
    x = Fraction(x)
    arg: BivTerms = {}
    for m in range(1, trunc + 2):
        c = (-x) ** m * bernoulli_poly(m + 1, Fraction(w, r)) / (m * (m + 1))
        if c == 0:
            continue
        arg[(m, 0)] = arg.get((m, 0), Fraction(0)) + c
        arg[(0, m)] = arg.get((0, m), Fraction(0)) - ((-1) ** m) * c
    arg = {k: v for k, v in arg.items() if v != 0}
    expo = _biv_exp({k: -v for k, v in arg.items()}, trunc + 1)
    num: BivTerms = {}
    for key, c in expo.items():
        num[key] = -c
    num[(0, 0)] = num.get((0, 0), Fraction(0)) + 1
    num = {k: v for k, v in num.items() if v != 0}

    quot = _divide_by_psi_sum(num)
    quot = {k: v for k, v in quot.items() if sum(k) <= trunc and v != 0}
    return EdgeSeries(trunc, tuple(sorted(quot.items())))


def _divide_by_psi_sum(num: BivTerms) -> BivTerms:
    """Exact division by (psi' + psi''), solving N[i,j] = Q[i-1,j] + Q[i,j-1]."""
    if not num:
        return {}
    imax = max(i for i, _ in num)
    jmax = max(j for _, j in num)
    q: BivTerms = {}
    for i in range(imax, 0, -1):
        for j in range(0, jmax + 1):
            val = num.get((i, j), Fraction(0)) - q.get((i, j - 1), Fraction(0))
            if val != 0:
                q[(i - 1, j)] = val
    for j in range(0, jmax + 1):
        rem = num.get((0, j), Fraction(0)) - q.get((0, j - 1), Fraction(0))
        if rem != 0:
            raise EdgeDivisionError("numerator not divisible by psi' + psi''")
    return q


def edge_series_remultiply(series: EdgeSeries) -> BivTerms:
    """(psi'+psi'') * series, for the re-multiplication invariant check."""
    out: BivTerms = {}
    for (i, j), c in series.terms:
        for key in ((i + 1, j), (i, j + 1)):
            v = out.get(key, Fraction(0)) + c
            if v == 0:
                out.pop(key, None)
            else:
                out[key] = v
    return out


def substitute_edge(series: EdgeSeries, poly: TautPolynomial, slot_a: int, slot_b: int) -> TautPolynomial:
    """Multiply `poly` by series(psi_{slot_a}, psi_{slot_b}) on one vertex.

    The two slots must be distinct local points (a self-loop provides two
    distinct half-edge points on the same vertex).
    """
    if slot_a == slot_b:
        raise ValueError("edge slots collide; half-edges must sit at distinct points")
    out = TautPolynomial.zero(poly.n_points, poly.trunc)
    for (i, j), c in series.terms:
        out = out + poly.mul_monomial((), {slot_a: i, slot_b: j}, c)
    return out
