"""Seeded fixture generators and independent oracles shared by the test modules."""

from __future__ import annotations

import random
from functools import reduce
from itertools import combinations, product
from math import gcd

from baerlab.abelian import AbHom, FgAbGroup, IntMatrix, direct_sum
from baerlab.groups import FiniteGroup, closure, is_homomorphism, normal_subgroups
from baerlab.groups.triples import TripleInstance
from baerlab.simplicial import ChainComplexAb, LevelwiseSurjection, dold_kan, dold_kan_map

DEFAULT_SEED = 20240917


# -- integer matrices ---------------------------------------------------------

def random_matrix(rng: random.Random, max_dim: int = 6, lo: int = -9, hi: int = 9) -> IntMatrix:
    r, c = rng.randint(1, max_dim), rng.randint(1, max_dim)
    # mix in sparse and low-rank shapes so zero rows and repeated factors appear
    style = rng.random()
    if style < 0.2:
        rows = [[rng.randint(lo, hi) if rng.random() < 0.3 else 0 for _ in range(c)] for _ in range(r)]
    elif style < 0.4 and r > 1:
        base = [[rng.randint(lo, hi) for _ in range(c)] for _ in range(max(1, r // 2))]
        rows = [list(rng.choice(base)) if rng.random() < 0.5 else [rng.randint(lo, hi) for _ in range(c)]
                for _ in range(r)]
    else:
        rows = [[rng.randint(lo, hi) for _ in range(c)] for _ in range(r)]
    return IntMatrix.from_rows(rows, ncols=c)


def bareiss_det(rows: list[list[int]]) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def determinantal_invariants(m: IntMatrix) -> list[int]:
    """Invariant factors from gcds of k x k minors: ``s_k = d_k / d_{k-1}``."""
    rows = m.tolist()
    ds = [1]
    for k in range(1, min(m.nrows, m.ncols) + 1):
        g = 0
        for ri in combinations(range(m.nrows), k):
            for ci in combinations(range(m.ncols), k):
                g = gcd(g, bareiss_det([[rows[i][j] for j in ci] for i in ri]))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        ds.append(g)
    return [ds[k] // ds[k - 1] for k in range(1, len(ds))]


def coker_oracle(m: IntMatrix) -> tuple[int, tuple[int, ...]]:
    """Rank and invariant factors of ``Z^nrows / col span(m)`` from the minor oracle."""
    inv = determinantal_invariants(m)
    return m.nrows - len(inv), tuple(d for d in inv if d > 1)


# -- simplicial fixtures -------------------------------------------------------

def _unimodular(rng: random.Random, n: int, steps: int = 6) -> IntMatrix:
    rows = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((-2, -1, 1, 2))
        rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return IntMatrix.from_rows(rows, ncols=n)


def _inverse_unimodular(u: IntMatrix) -> IntMatrix:
    from baerlab.abelian import solve_matrix
    return solve_matrix(u, IntMatrix.identity(u.nrows))


def random_homology(rng: random.Random, top: int) -> list[tuple[int, tuple[int, ...]]]:
    """Prescribed ``(rank, torsion)`` in degrees ``0..top``."""
    out = []
    for _ in range(top + 1):
        rank = rng.choice((0, 0, 1, 1, 2))
        tors = tuple(sorted(rng.choice((2, 3, 4, 6)) for _ in range(rng.choice((0, 0, 1, 1, 2)))))
        out.append((rank, tors))
    return out


def complex_with_homology(rng: random.Random, spec, scramble: bool = True) -> ChainComplexAb:
    """Free complex in degrees ``0..len(spec)`` whose homology below the top is ``spec``.

    Free summands give ``Z``; a pair ``Z --d--> Z`` from degree ``n+1`` to
    ``n`` gives ``Z_d`` in degree ``n``.  The top degree also carries a free
    summand killed by nothing, so homology is only prescribed below it.
    Random unimodular changes of basis hide the splitting.
    """
    top = len(spec)
    gens: list[list] = [[] for _ in range(top + 1)]  # per degree: tags
    for n, (rank, tors) in enumerate(spec):
        gens[n] += [("free",)] * rank
        for d in tors:
            gens[n].append(("tors_low", d))
            gens[n + 1].append(("tors_high", d, n, len(gens[n]) - 1))
    gens[top].append(("free",))
    ranks = [len(g) for g in gens]
    mats = []
    for n in range(1, top + 1):
        rows = [[0] * ranks[n] for _ in range(ranks[n - 1])]
        for j, tag in enumerate(gens[n]):
            if tag[0] == "tors_high" and tag[2] == n - 1:
                rows[tag[3]][j] = tag[1]
        mats.append(IntMatrix.from_rows(rows, ncols=ranks[n]) if ranks[n - 1] else IntMatrix.zeros(0, ranks[n]))
    if scramble:
        us = [_unimodular(rng, r) if r else IntMatrix.identity(0) for r in ranks]
        inv = [_inverse_unimodular(u) if u.nrows else u for u in us]
        mats = [us[n - 1] @ mats[n - 1] @ inv[n] for n in range(1, top + 1)]
    groups = [FgAbGroup.free(r) for r in ranks]
    diffs = [None] + [AbHom(groups[n], groups[n - 1], mats[n - 1]) for n in range(1, top + 1)]
    return ChainComplexAb(groups, diffs)


def spec_group(entry) -> FgAbGroup:
    rank, tors = entry
    return FgAbGroup.from_invariants(list(tors), rank).canonical_group()


def random_surjection(rng: random.Random, T: int = 3) -> LevelwiseSurjection:
    """A levelwise surjection between Dold-Kan objects.

    Either the projection ``C + D -> D`` or reduction ``C -> C/mC``; the
    second is not split, so its connecting maps are nontrivial (Bockstein).
    """
    c = complex_with_homology(rng, random_homology(rng, T - 1))
    if rng.random() < 0.5:
        d = complex_with_homology(rng, random_homology(rng, T - 1))
        s = ChainComplexAb([direct_sum(a, b) for a, b in zip(_pad(c, d), _pad(d, c))],
                           [None] + [_sum_diff(c, d, n) for n in range(1, max(c.length, d.length) + 1)])
        proj = [AbHom(s.group(n), d.group(n),
                      IntMatrix.zeros(d.group(n).ngens, c.group(n).ngens).hstack(IntMatrix.identity(d.group(n).ngens)))
                for n in range(s.length + 1)]
        x, y = dold_kan(s, T), dold_kan(d, T)
        return LevelwiseSurjection(x, y, dold_kan_map(s, d, proj, T, x, y))
    m = rng.choice((2, 3, 4))
    red_groups = [FgAbGroup(IntMatrix.identity(g.ngens).scale(m)) for g in c.groups]
    red = ChainComplexAb(red_groups, [None] + [AbHom(red_groups[n], red_groups[n - 1], c.diff(n).matrix)
                                               for n in range(1, c.length + 1)])
    ident = [AbHom(c.group(n), red.group(n), IntMatrix.identity(c.group(n).ngens)) for n in range(c.length + 1)]
    x, y = dold_kan(c, T), dold_kan(red, T)
    return LevelwiseSurjection(x, y, dold_kan_map(c, red, ident, T, x, y))


def _pad(c: ChainComplexAb, d: ChainComplexAb) -> list:
    return [c.group(n) for n in range(max(c.length, d.length) + 1)]


def _sum_diff(c: ChainComplexAb, d: ChainComplexAb, n: int) -> AbHom:
    src = direct_sum(c.group(n), d.group(n))
    dst = direct_sum(c.group(n - 1), d.group(n - 1))
    return AbHom(src, dst, IntMatrix.block_diag(c.diff(n).matrix, d.diff(n).matrix))


# -- groups ---------------------------------------------------------------------

def hom_from_images(src: FiniteGroup, dst: FiniteGroup, gens, images):
    """Extend generator images to an element map; ``None`` if not a homomorphism."""
    fmap = {src.identity: dst.identity}
    frontier = [src.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for a, b in zip(gens, images):
                y = src.mul(x, a)
                if y not in fmap:
                    fmap[y] = dst.mul(fmap[x], b)
                    nxt.append(y)
        frontier = nxt
    if len(fmap) != src.order:
        return None
    out = tuple(fmap[x] for x in range(src.order))
    return out if is_homomorphism(src, dst, out) else None


def random_hom(rng: random.Random, src: FiniteGroup, dst: FiniteGroup, tries: int = 200):
    gens = list(src.generator_elements or range(src.order))
    for _ in range(tries):
        f = hom_from_images(src, dst, gens, [rng.randrange(dst.order) for _ in gens])
        if f is not None:
            return f
    return tuple(dst.identity for _ in range(src.order))


def random_triple_over(rng: random.Random, g: FiniteGroup, m_floor=None, n_floor=None, name=""):
    """Random normal ``M, N`` of ``g`` containing the given element sets."""
    normals = normal_subgroups(g)
    def pick(floor):
        ok = [s for s in normals if floor is None or set(floor) <= set(s.elements)]
        return rng.choice(ok)
    return TripleInstance(g, pick(m_floor), pick(n_floor), name)


def abelianization_order(g: FiniteGroup) -> int:
    comms = {g.commutator(a, b) for a in range(g.order) for b in range(g.order)}
    return g.order // closure(g, comms).order


def all_pairs(g: FiniteGroup):
    return [(g, n) for n in normal_subgroups(g)]


def lcm_all(xs) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), xs, 1)


def cyclic_product(*orders: int) -> FiniteGroup:
    """``Z_{n_1} x ... x Z_{n_k}`` by a table on tuples."""
    elems = list(product(*[range(n) for n in orders]))
    idx = {e: i for i, e in enumerate(elems)}
    names = ["(" + ",".join(map(str, e)) + ")" for e in elems]
    table = [[idx[tuple((a + b) % n for a, b, n in zip(x, y, orders))] for y in elems] for x in elems]
    return FiniteGroup(names, table)
