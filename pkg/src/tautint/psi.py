"""Intersection numbers of pure psi classes on Mbar_{g,n}.

<tau_{d_1} ... tau_{d_n}>_g is computed by the Virasoro/DVV recursion with
string and dilaton fast paths, seeded by <tau_0^3>_0 = 1 and by the genus-one
value <tau_1>_{1,1} = 1/24 (the central term of the L_0 constraint, which the
quadratic recursion cannot reach on its own).
"""

from __future__ import annotations

import logging
import threading
from fractions import Fraction
from pathlib import Path
from typing import Iterable

log = logging.getLogger(__name__)

CACHE_VERSION = "tautint-psi-cache v1"

_cache: dict[tuple[int, tuple[int, ...]], Fraction] = {}
_cache_lock = threading.Lock()


def is_stable(g: int, n: int) -> bool:
    return 2 * g - 2 + n > 0


def _dfact(k: int) -> int:
    """Odd double factorial with (-1)!! = 1."""
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def psi_integral(g: int, d: Iterable[int]) -> Fraction:
    """Exact value of int_{Mbar_{g,n}} prod_i psi_i^{d_i}.

    Zero unless sum(d) == 3g-3+n; symmetric in the exponents.  Raises on
    unstable (g, n) and on n == 0 (no marked points, nothing to integrate).
    """
    d = tuple(d)
    n = len(d)
    if n == 0:
        raise ValueError("psi integrals need at least one marked point")
    if any(e < 0 for e in d):
        raise ValueError("psi exponents must be nonnegative")
    if not is_stable(g, n):
        raise ValueError(f"unstable moduli space (g={g}, n={n})")
    if sum(d) != 3 * g - 3 + n:
        return Fraction(0)
    key = (g, tuple(sorted(d, reverse=True)))
    cached = _cache.get(key)
    if cached is not None:
        return cached
    val = _compute(g, key[1])
    with _cache_lock:
        _cache.setdefault(key, val)
    return val


def _compute(g: int, d: tuple[int, ...]) -> Fraction:
    n = len(d)
    if (g, n) == (0, 3):
        return Fraction(1)
    if (g, n) == (1, 1):
        return Fraction(1, 24)  # seeded: L_0 central term

    if 0 in d and is_stable(g, n - 1):
        rest = list(d)
        rest.remove(0)
        acc = Fraction(0)
        for j, dj in enumerate(rest):
            if dj >= 1:
                acc += psi_integral(g, rest[:j] + [dj - 1] + rest[j + 1 :])
        return acc

    if 1 in d and is_stable(g, n - 1):
        rest = list(d)
        rest.remove(1)
        return (2 * g - 3 + n) * psi_integral(g, rest)

    # all exponents >= 2: DVV on the largest one
    d1 = d[0]
    rest = d[1:]
    acc = Fraction(0)
    for j, dj in enumerate(rest):
        others = rest[:j] + rest[j + 1 :]
        acc += Fraction(_dfact(2 * (d1 + dj) - 1), _dfact(2 * dj - 1)) * psi_integral(
            g, (d1 + dj - 1,) + others
        )
    quad = Fraction(0)
    for a in range(d1 - 1):
        b = d1 - 2 - a
        w = Fraction(_dfact(2 * a + 1) * _dfact(2 * b + 1))
        if g >= 1 and is_stable(g - 1, n + 1):
            quad += w * psi_integral(g - 1, (a, b) + rest)
        m = len(rest)
        for mask in range(1 << m):
            left = tuple(rest[i] for i in range(m) if mask >> i & 1)
            right = tuple(rest[i] for i in range(m) if not mask >> i & 1)
            for g1 in range(g + 1):
                g2 = g - g1
                if is_stable(g1, len(left) + 1) and is_stable(g2, len(right) + 1):
                    quad += (
                        w
                        * psi_integral(g1, (a,) + left)
                        * psi_integral(g2, (b,) + right)
                    )
    acc += quad / 2
    return acc / _dfact(2 * d1 + 1)


# -- cache persistence --------------------------------------------------------


def cache_size() -> int:
    return len(_cache)


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


def save_cache(path: str | Path) -> int:
    """Write the memo table as sorted 'g;d_1,...,d_n;p/q' lines."""
    lines = [f"# {CACHE_VERSION}"]
    for (g, d), v in sorted(_cache.items()):
        lines.append(f"{g};{','.join(map(str, d))};{v.numerator}/{v.denominator}")
    Path(path).write_text("\n".join(lines) + "\n")
    return len(_cache)


def load_cache(path: str | Path) -> int:
    """Load a cache file, skipping (with a warning) any corrupted line."""
    p = Path(path)
    if not p.exists():
        return 0
    loaded = 0
    for lineno, line in enumerate(p.read_text().splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            gs, ds, vs = line.split(";")
            g = int(gs)
            d = tuple(int(t) for t in ds.split(",")) if ds else ()
            num, _, den = vs.partition("/")
            val = Fraction(int(num), int(den) if den else 1)
            if not d or not is_stable(g, len(d)) or sum(d) != 3 * g - 3 + len(d):
                raise ValueError("inconsistent index")
        except (ValueError, ZeroDivisionError) as exc:
            log.warning("skipping corrupted cache line %d (%s): %r", lineno, exc, line)
            continue
        with _cache_lock:
            _cache.setdefault((g, tuple(sorted(d, reverse=True))), val)
        loaded += 1
    return loaded
