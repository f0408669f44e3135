import pytest

from tautint.graphs import (
    StableGraph,
    WeightingConstraintError,
    automorphism_order,
    enumerate_stable_graphs,
    enumerate_weightings,
)

from oracles import brute_stable_graphs


def test_small_counts():
    assert len(enumerate_stable_graphs(0, 3)) == 1
    assert len(enumerate_stable_graphs(1, 1)) == 2
    assert len(enumerate_stable_graphs(0, 4)) == 4


def test_genus_and_h1_bookkeeping():
    for (g, n) in [(1, 2), (2, 0), (2, 1), (0, 5)]:
        for G in enumerate_stable_graphs(g, n):
            assert sum(G.genera) + G.h1() == g
            assert G.n_legs == n
            assert all(2 * gv - 2 + G.valence(v) > 0 for v, gv in enumerate(G.genera))
            assert all(d >= 0 for d in G.vertex_dims())


@pytest.mark.parametrize("g,n", [(0, 3), (0, 4), (0, 5), (1, 1), (1, 2), (2, 0), (2, 1)])
def test_counts_and_aut_against_bruteforce(g, n):
    oracle = brute_stable_graphs(g, n)
    mine = enumerate_stable_graphs(g, n)
    assert len(mine) == len(oracle)
    # match by the oracle's own orbit representatives
    from itertools import permutations

    orep = {}
    for G in mine:
        rep = min(
            _relabel(G.genera, G.legs, G.edges, perm)
            for perm in permutations(range(G.n_vertices))
        )
        orep[rep] = automorphism_order(G)
    assert set(orep) == set(oracle)
    for rep, aut in oracle.items():
        assert orep[rep] == aut, rep


def _relabel(genera, legs, edges, perm):
    ng = [0] * len(genera)
    for v, gv in enumerate(genera):
        ng[perm[v]] = gv
    nl = tuple(perm[v] for v in legs)
    ne = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
    return (tuple(ng), nl, ne)


def test_aut_examples():
    smooth = enumerate_stable_graphs(1, 1)[0]
    assert smooth.n_edges == 0 and automorphism_order(smooth) == 1
    loop = enumerate_stable_graphs(1, 1)[1]
    assert loop.n_edges == 1 and automorphism_order(loop) == 2
    # two genus-0 vertices joined by two parallel edges, one leg on each
    G = StableGraph((0, 0), (0, 1), ((0, 1), (0, 1)))
    assert automorphism_order(G) == 2


def test_serialization_format():
    G = StableGraph((0,), (0,), ((0, 0),))
    assert G.serialize() == "V:0|L:1|E:(1,1)"


def test_deterministic_order():
    a = enumerate_stable_graphs(1, 2)
    b = enumerate_stable_graphs(1, 2)
    assert [G.serialize() for G in a] == [G.serialize() for G in b]
    assert list(a) == sorted(a)


def test_weightings_r1_and_smooth():
    for (g, n) in [(1, 1), (0, 4), (2, 0)]:
        for G in enumerate_stable_graphs(g, n):
            ws = enumerate_weightings(G, 1, -1, (0,) * n)
            assert len(ws) == 1
    smooth = enumerate_stable_graphs(1, 2)[0]
    assert smooth.n_edges == 0
    assert len(enumerate_weightings(smooth, 3, 1, (1, 1))) == 1


def test_weightings_selfloop_example():
    loop = enumerate_stable_graphs(1, 1)[1]
    ws = enumerate_weightings(loop, 2, 0, (0,))
    assert sorted(w.residues for w in ws) == [(0,), (1,)]
    assert {(w.residue(0, 0), w.residue(0, 1)) for w in ws} == {(0, 0), (1, 1)}


def test_weighting_count_is_r_pow_h1():
    for (g, n) in [(1, 1), (1, 2), (2, 0), (2, 1), (0, 5)]:
        for r in (1, 2, 3, 4):
            for G in enumerate_stable_graphs(g, n):
                if G.h1() > 2:
                    continue
                s = 1
                a = None
                for first in range(1, r + 1):
                    cand = (first,) + (r,) * (n - 1) if n else ()
                    if (sum(cand) - (2 * g - 2 + n) * s) % r == 0:
                        a = cand
                        break
                if a is None:
                    continue
                assert len(enumerate_weightings(G, r, s, a)) == r ** G.h1()


def test_weighting_global_constraint_error():
    G = enumerate_stable_graphs(1, 1)[0]
    with pytest.raises(WeightingConstraintError):
        enumerate_weightings(G, 2, 0, (1,))
