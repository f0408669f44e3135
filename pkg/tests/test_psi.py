import random
from fractions import Fraction as F

import pytest

from tautint.psi import clear_cache, load_cache, psi_integral, save_cache

# classical values; the genus >= 2 ones match the standard tables
KNOWN = {
    (0, (0, 0, 0)): F(1),
    (0, (1, 0, 0, 0)): F(1),
    (0, (2, 0, 0, 0, 0)): F(1),
    (0, (1, 1, 0, 0, 0)): F(2),
    (1, (1,)): F(1, 24),
    (1, (0, 2)): F(1, 24),
    (1, (1, 1)): F(1, 24),
    (1, (2, 1, 0)): F(1, 12),
    (1, (1, 1, 1)): F(1, 12),
    (2, (4,)): F(1, 1152),
    (2, (5, 0)): F(1, 1152),
    (2, (4, 1)): F(1, 384),
    (2, (3, 2)): F(29, 5760),
    (2, (2, 2, 2)): F(7, 240),
    (3, (7,)): F(1, 82944),
}


def test_known_values():
    for (g, d), v in KNOWN.items():
        assert psi_integral(g, d) == v, (g, d)


def test_dimension_gate_and_symmetry():
    assert psi_integral(1, (2,)) == 0
    assert psi_integral(0, (1, 1, 1, 0)) == 0
    assert psi_integral(2, (3, 2)) == psi_integral(2, (2, 3))


def test_unstable_raises():
    with pytest.raises(ValueError):
        psi_integral(0, (0, 0))
    with pytest.raises(ValueError):
        psi_integral(1, ())


def _random_stable_indices(count, seed=20240817):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        g = rng.randint(0, 3)
        n = rng.randint(1, 6)
        if 2 * g - 2 + n <= 0:
            continue
        dim = 3 * g - 3 + n
        cuts = sorted(rng.randint(0, dim) for _ in range(n - 1))
        d = []
        prev = 0
        for c in cuts + [dim]:
            d.append(c - prev)
            prev = c
        out.append((g, tuple(d)))
    return out


def test_string_equation_randomized():
    for g, d in _random_stable_indices(50, seed=11):
        if 2 * g - 2 + (len(d) + 1) <= 0:
            continue
        lhs = psi_integral(g, d + (0,))
        rhs = sum(
            psi_integral(g, d[:j] + (d[j] - 1,) + d[j + 1 :]) for j in range(len(d)) if d[j] >= 1
        )
        assert lhs == rhs, (g, d)


def test_dilaton_equation_randomized():
    for g, d in _random_stable_indices(50, seed=12):
        n = len(d)
        lhs = psi_integral(g, d + (1,))
        rhs = (2 * g - 2 + n) * psi_integral(g, d)
        assert lhs == rhs, (g, d)


def test_cache_roundtrip(tmp_path):
    psi_integral(2, (4,))
    path = tmp_path / "cache.txt"
    saved = save_cache(path)
    assert saved > 0
    text = path.read_text()
    assert text.splitlines()[0].startswith("#")
    clear_cache()
    loaded = load_cache(path)
    assert loaded == saved
    assert psi_integral(2, (4,)) == F(1, 1152)


def test_concurrent_psi_queries_agree():
    import threading

    queries = [(2, (4,)), (2, (3, 2)), (1, (1, 1, 1)), (3, (7,)), (0, (2, 0, 0, 0, 0))]
    results = []

    def worker():
        results.append([psi_integral(g, d) for g, d in queries])

    threads = [threading.Thread(target=worker) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)


def test_cache_skips_corrupt_lines(tmp_path, caplog):
    path = tmp_path / "bad.txt"
    path.write_text("# header\n1;1;1/24\nnot a line\n1;1;0/0\n9;1,2;3/4\n")
    with caplog.at_level("WARNING"):
        loaded = load_cache(path)
    assert loaded == 1  # only the valid <tau_1>_1 line
    assert psi_integral(1, (1,)) == F(1, 24)
