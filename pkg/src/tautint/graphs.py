"""Stable graphs of type (g, n): enumeration up to isomorphism, automorphism
orders, and mod-r half-edge weightings.

A graph stores vertex genera, the vertex carrying each labelled leg, and a
tuple of edges (a, b) with a <= b; self-loops appear as (v, v).  Markings are
labelled and never permuted by automorphisms.  Enumeration proceeds by
repeated elementary degenerations (vertex splitting and genus reduction)
starting from the smooth graph, with canonical relabelling for isomorph
rejection; completeness follows because contracting any edge of a stable
graph yields a stable graph with one edge fewer.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product as iproduct
from math import factorial

from .psi import is_stable


class WeightingConstraintError(ValueError):
    """The a-vector violates sum(a_i) = (2g-2+n)s mod r: empty domain."""


@dataclass(frozen=True)
class StableGraph:
    genera: tuple[int, ...]
    legs: tuple[int, ...]  # legs[i] = vertex carrying marking i+1
    edges: tuple[tuple[int, int], ...]

    @property
    def n_vertices(self) -> int:
        return len(self.genera)

    @property
    def n_legs(self) -> int:
        return len(self.legs)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def h1(self) -> int:
        return self.n_edges - self.n_vertices + 1

    def genus(self) -> int:
        return sum(self.genera) + self.h1()

    def half_edges_at(self, v: int) -> list[tuple[int, int]]:
        """(edge index, side) pairs incident to v, in deterministic order."""
        out = []
        for e, (a, b) in enumerate(self.edges):
            if a == v:
                out.append((e, 0))
            if b == v:
                out.append((e, 1))
        return out

    def legs_at(self, v: int) -> list[int]:
        return [i + 1 for i, w in enumerate(self.legs) if w == v]

    def valence(self, v: int) -> int:
        return len(self.legs_at(v)) + len(self.half_edges_at(v))

    def vertex_dims(self) -> list[int]:
        return [3 * g - 3 + self.valence(v) for v, g in enumerate(self.genera)]

    def serialize(self) -> str:
        vs = ",".join(str(g) for g in self.genera)
        ls = ",".join(str(v + 1) for v in self.legs)
        es = ",".join(f"({a + 1},{b + 1})" for a, b in self.edges)
        return f"V:{vs}|L:{ls}|E:{es}"

    def __lt__(self, other: StableGraph) -> bool:
        return (self.n_edges, self.serialize()) < (other.n_edges, other.serialize())


def _relabeled(genera, legs, edges, perm) -> tuple:
    """Apply vertex relabelling old -> perm[old] and normalise."""
    ng = [0] * len(genera)
    for v, g in enumerate(genera):
        ng[perm[v]] = g
    nl = tuple(perm[v] for v in legs)
    ne = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in edges))
    return (tuple(ng), nl, ne)


def _refine_colors(genera, legs, edges) -> list[tuple]:
    nv = len(genera)
    legsets = [tuple(sorted(i for i, v in enumerate(legs) if v == w)) for w in range(nv)]
    adj: list[Counter] = [Counter() for _ in range(nv)]
    loops = [0] * nv
    for a, b in edges:
        if a == b:
            loops[a] += 1
        else:
            adj[a][b] += 1
            adj[b][a] += 1
    colors = [(genera[v], legsets[v], loops[v], sum(adj[v].values())) for v in range(nv)]
    while True:
        ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
        rank = [ranks[c] for c in colors]
        new = [
            (rank[v], tuple(sorted((rank[w], m) for w, m in adj[v].items())))
            for v in range(nv)
        ]
        if len(set(new)) == len(set(colors)) and all(
            (rank[v] == rank[w]) == (new[v] == new[w])
            for v in range(nv)
            for w in range(nv)
        ):
            return [new[v] for v in range(nv)]
        colors = new


def canonical_form(genera, legs, edges) -> tuple:
    """Lexicographically minimal (genera, legs, edges) over vertex relabellings
    compatible with the refinement classes."""
    nv = len(genera)
    colors = _refine_colors(genera, legs, edges)
    order = sorted(range(nv), key=lambda v: (colors[v], v))
    classes: list[list[int]] = []
    for v in order:
        if classes and colors[classes[-1][0]] == colors[v]:
            classes[-1].append(v)
        else:
            classes.append([v])
    best: tuple | None = None
    for perms in iproduct(*(permutations(cls) for cls in classes)):
        perm = [0] * nv
        pos = 0
        for chunk in perms:
            for v in chunk:
                perm[v] = pos
                pos += 1
        cand = _relabeled(genera, legs, edges, perm)
        if best is None or cand < best:
            best = cand
    assert best is not None
    return best


def _degenerations(G: StableGraph):
    """One-edge degenerations: genus drops and vertex splittings."""
    for v, gv in enumerate(G.genera):
        if gv >= 1:
            genera = list(G.genera)
            genera[v] = gv - 1
            yield (tuple(genera), G.legs, G.edges + ((v, v),))
    for v, gv in enumerate(G.genera):
        stubs = [("leg", i) for i in G.legs_at(v)] + [
            ("half", e, side) for e, side in G.half_edges_at(v)
        ]
        k = len(stubs)
        w = G.n_vertices
        for g1 in range(gv + 1):
            g2 = gv - g1
            for mask in range(1 << k):
                size1 = bin(mask).count("1")
                if not (is_stable(g1, size1 + 1) and is_stable(g2, k - size1 + 1)):
                    continue
                genera = list(G.genera) + [g2]
                genera[v] = g1
                legs = list(G.legs)
                moves: dict[tuple[int, int], int] = {}
                for t, stub in enumerate(stubs):
                    target = v if mask >> t & 1 else w
                    if stub[0] == "leg":
                        legs[stub[1] - 1] = target
                    else:
                        moves[(stub[1], stub[2])] = target
                edges = []
                for e, (a, b) in enumerate(G.edges):
                    na = moves.get((e, 0), a)
                    nb = moves.get((e, 1), b)
                    edges.append(tuple(sorted((na, nb))))
                edges.append(tuple(sorted((v, w))))
                yield (tuple(genera), tuple(legs), tuple(sorted(edges)))


@lru_cache(maxsize=None)
def enumerate_stable_graphs(g: int, n: int) -> tuple[StableGraph, ...]:
    """All isomorphism classes of stable graphs of type (g, n), sorted by
    (edge count, serialisation)."""
    if not is_stable(g, n):
        raise ValueError(f"unstable type (g={g}, n={n})")
    if g == 0 and n >= 8:
        # labelled legs make genus-0 trees rigid; build each class exactly
        # once by recursively partitioning the legs (rooting at leg 1), so no
        # isomorph rejection or canonical relabelling is needed
        forms = set(_genus0_forms(n))
    else:
        smooth = canonical_form((g,), (0,) * n, ())
        forms = {smooth}
        frontier = [smooth]
        while frontier:
            nxt = []
            for form in frontier:
                G = StableGraph(*form)
                for child in _degenerations(G):
                    c = canonical_form(*child)
                    if c not in forms:
                        forms.add(c)
                        nxt.append(c)
            frontier = nxt
    graphs = [StableGraph(*form) for form in forms]
    graphs.sort(key=lambda G: (G.n_edges, G.serialize()))
    return tuple(graphs)


def _set_partitions(items: tuple[int, ...]):
    """All partitions of a nonempty tuple into unordered blocks."""
    if len(items) == 1:
        yield [items]
        return
    head, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [(head,) + part[i]] + part[i + 1 :]
        yield [(head,)] + part


def _genus0_forms(n: int):
    """Stable genus-0 trees with legs 1..n as (genera, legs, edges) tuples."""

    def grow(block: tuple[int, ...], parent: int, genera, legs, edges):
        """Attach a vertex for `block` (>= 2 legs) below vertex `parent`."""
        v = len(genera)
        genera.append(0)
        if parent >= 0:
            edges.append((parent, v))
        outcomes = []
        for part in _set_partitions(block):
            if len(part) < 2:
                continue
            state = (list(genera), list(legs), list(edges))
            stack = [(v, [b for b in part if len(b) >= 2])]
            for b in part:
                if len(b) == 1:
                    state[1][b[0] - 1] = v
            outcomes.append((state, stack))
        return outcomes

    def rec(genera, legs, edges, pending):
        if not pending:
            yield (tuple(genera), tuple(legs), tuple(sorted(edges)))
            return
        (vertex, blocks), rest = pending[0], pending[1:]
        if not blocks:
            yield from rec(genera, legs, edges, rest)
            return
        block, more = blocks[0], blocks[1:]
        for (sg, sl, se), stack in grow(block, vertex, list(genera), list(legs), list(edges)):
            yield from rec(sg, sl, se, [(vertex, more)] + stack + list(rest))

    # root vertex carries leg 1 plus the blocks of a partition of {2..n}
    for part in _set_partitions(tuple(range(2, n + 1))):
        if len(part) < 2:
            continue
        genera = [0]
        legs = [0] * n
        for b in part:
            if len(b) == 1:
                legs[b[0] - 1] = 0
        blocks = [b for b in part if len(b) >= 2]
        yield from rec(genera, legs, [], [(0, blocks)])


@lru_cache(maxsize=None)
def automorphism_order(G: StableGraph) -> int:
    """Order of the automorphism group fixing legs pointwise.

    Vertex permutations must preserve genus, leg sets and adjacency counts;
    on top of those, parallel edges permute freely and each self-loop may
    swap its two half-edges.
    """
    nv = G.n_vertices
    loops = Counter()
    pairs: Counter = Counter()
    for a, b in G.edges:
        if a == b:
            loops[a] += 1
        else:
            pairs[(a, b)] += 1

    key = [(G.genera[v], tuple(G.legs_at(v))) for v in range(nv)]
    classes: dict[tuple, list[int]] = {}
    for v in range(nv):
        classes.setdefault(key[v], []).append(v)
    # legged vertices cannot move (legs are labelled and fixed pointwise)
    movable = [vs for k, vs in sorted(classes.items()) if not k[1] and len(vs) > 1]
    fixed = [v for k, vs in classes.items() if k[1] or len(vs) == 1 for v in vs]

    def preserves(perm: dict[int, int]) -> bool:
        img: Counter = Counter()
        for (a, b), mult in pairs.items():
            img[tuple(sorted((perm[a], perm[b])))] += mult
        if img != pairs:
            return False
        return all(loops[v] == loops[perm[v]] for v in perm)

    count = 0
    for choice in iproduct(*(permutations(vs) for vs in movable)):
        perm = {v: v for v in fixed}
        for vs, imgs in zip(movable, choice):
            for v, w in zip(vs, imgs):
                perm[v] = w
        if preserves(perm):
            count += 1
    order = max(count, 1)
    for mult in pairs.values():
        order *= factorial(mult)
    for mult in loops.values():
        order *= factorial(mult) * 2 ** mult
    return order


@dataclass(frozen=True)
class Weighting:
    """Residues of the side-0 half-edges; the partner residue is (r-w) % r."""

    r: int
    residues: tuple[int, ...]

    def residue(self, edge: int, side: int) -> int:
        w = self.residues[edge]
        return w if side == 0 else (self.r - w) % self.r


def enumerate_weightings(G: StableGraph, r: int, s: int, a: tuple[int, ...]) -> list[Weighting]:
    """All admissible mod-r half-edge decorations.

    Legs are pinned to a_i mod r; the halves of each edge sum to 0 mod r; at
    each vertex the local decorations sum to (2g_v - 2 + n_v) s mod r.
    Raises WeightingConstraintError if the global congruence fails.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if len(a) != G.n_legs:
        raise ValueError("a-vector length must match the number of legs")
    g, n = G.genus(), G.n_legs
    if (sum(a) - (2 * g - 2 + n) * s) % r != 0:
        raise WeightingConstraintError(
            f"sum(a) != (2g-2+n)s mod r for g={g}, n={n}, r={r}, s={s}, a={a}"
        )
    ne = G.n_edges
    leg_part = []
    targets = []
    for v in range(G.n_vertices):
        nv = G.valence(v)
        leg_part.append(sum(a[i - 1] for i in G.legs_at(v)) % r)
        targets.append(((2 * G.genera[v] - 2 + nv) * s) % r)
    incidence = [G.half_edges_at(v) for v in range(G.n_vertices)]

    if G.h1() == 0 and ne:
        # on a tree the residues are forced: peel leaves, each step fixing
        # the single undetermined half-edge of some vertex
        residues: list[int | None] = [None] * ne
        remaining = [list(inc) for inc in incidence]
        acc = list(leg_part)
        order = list(range(G.n_vertices))
        progress = True
        while progress:
            progress = False
            for v in order:
                und = [h for h in remaining[v] if residues[h[0]] is None]
                if len(und) == 1:
                    e, side = und[0]
                    need = (targets[v] - acc[v]) % r
                    residues[e] = need if side == 0 else (r - need) % r
                    progress = True
                    for w in range(G.n_vertices):
                        for e2, side2 in remaining[w]:
                            if e2 == e:
                                acc[w] = (
                                    acc[w] + (residues[e] if side2 == 0 else (r - residues[e]) % r)
                                ) % r
                    remaining = [
                        [h for h in inc if h[0] != e] for inc in remaining
                    ]
        assert all(w is not None for w in residues), "tree peeling must terminate"
        cand = Weighting(r, tuple(residues))  # type: ignore[arg-type]
        for v in range(G.n_vertices):
            tot = leg_part[v]
            for e, side in incidence[v]:
                tot += cand.residue(e, side)
            if tot % r != targets[v]:
                return []
        return [cand]

    out = []
    for residues in iproduct(range(r), repeat=ne):
        cand = Weighting(r, residues)
        ok = True
        for v in range(G.n_vertices):
            tot = leg_part[v]
            for e, side in incidence[v]:
                tot += cand.residue(e, side)
            if tot % r != targets[v]:
                ok = False
                break
        if ok:
            out.append(cand)
    return out
