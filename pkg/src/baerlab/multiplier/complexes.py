"""Normalized bar chains of a finite group and their graph-shaped subcomplexes.

The normalized bar complex of ``G`` has basis the tuples of non-identity
elements.  Projecting to one or two quotients sends each tuple to at most
one basis tuple on each side (or to zero when the image tuple is
degenerate).  Negating one side turns the projection into the incidence
matrix of a graph whose edges are the tuples, so the kernel is a cycle
space: fundamental cycles of a BFS spanning forest form a basis, and the
coordinates of any kernel element are its coefficients on non-tree edges.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import product as iproduct
from typing import Sequence

from ..abelian import AbHom, FgAbGroup, IntMatrix
from ..errors import IllDefinedHom
from ..groups.finite import FiniteGroup
from ..simplicial.objects import ChainComplexAb

GROUND = ("ground",)


@lru_cache(maxsize=None)
def _tuples(g: FiniteGroup, n: int, normalized: bool = True) -> tuple[tuple, dict]:
    elems = [x for x in range(g.order) if x != g.identity or not normalized]
    tl = list(iproduct(elems, repeat=n))
    return tl, {t: i for i, t in enumerate(tl)}


def nondegenerate_tuples(g: FiniteGroup, n: int) -> list:
    return _tuples(g, n)[0]


def bar_boundary(g: FiniteGroup, t: tuple) -> dict:
    """``sum (-1)^i d_i t`` in normalized chains (tuples containing the identity dropped)."""
    n = len(t)
    out: dict = {}
    e = g.identity
    for i in range(n + 1):
        if i == 0:
            r = t[1:]
        elif i == n:
            r = t[:-1]
        else:
            p = g.mul(t[i - 1], t[i])
            if p == e:
                continue
            r = t[: i - 1] + (p,) + t[i + 1:]
        s = -1 if i % 2 else 1
        out[r] = out.get(r, 0) + s
    return {k: v for k, v in out.items() if v}


def push_chain(chain: dict, fmap: Sequence[int], identity: int) -> dict:
    """Image of a chain under a group map applied entrywise; degenerate images vanish."""
    out: dict = {}
    for t, c in chain.items():
        r = tuple(fmap[x] for x in t)
        if identity in r:
            continue
        out[r] = out.get(r, 0) + c
    return {k: v for k, v in out.items() if v}


class _Level:
    """Cycle basis of one degree."""

    def __init__(self, g: FiniteGroup, n: int, sides: Sequence[tuple], normalized: bool = True):
        tl, index = _tuples(g, n, normalized)
        self.index = index
        heads, tails = [], []
        for t in tl:
            ends = []
            for proj, ident in sides:
                r = tuple(proj[x] for x in t)
                ends.append((len(ends), r) if not (normalized and ident in r) else GROUND)
            while len(ends) < 2:
                ends.append(GROUND)
            heads.append(ends[0])
            tails.append(ends[1])
        adj: dict = {}
        for k, (h, tv) in enumerate(zip(heads, tails)):
            if h == tv:
                continue
            adj.setdefault(h, []).append(k)
            adj.setdefault(tv, []).append(k)
        parent: dict = {}  # vertex -> (edge, parent vertex)
        depth: dict = {}
        tree = set()
        order_v = sorted(adj, key=lambda v: (v != GROUND, v))
        for root in order_v:
            if root in depth:
                continue
            depth[root] = 0
            parent[root] = None
            dq = deque([root])
            while dq:
                u = dq.popleft()
                for k in adj[u]:
                    w = tails[k] if heads[k] == u else heads[k]
                    if w not in depth:
                        depth[w] = depth[u] + 1
                        parent[w] = (k, u)
                        tree.add(k)
                        dq.append(w)
        self.tuples = tl
        self.nontree = [k for k in range(len(tl)) if k not in tree]
        self.position = {k: j for j, k in enumerate(self.nontree)}
        self.cycles = []
        for k in self.nontree:
            h, tv = heads[k], tails[k]
            cyc = {k: 1}
            if h != tv:
                # walk h -> t through the tree: collect both root paths
                for k2, sgn in self._tree_walk(h, tv, parent, depth, heads, tails):
                    cyc[k2] = cyc.get(k2, 0) + sgn
            self.cycles.append({tl[e]: c for e, c in cyc.items() if c})

    @staticmethod
    def _tree_walk(a, b, parent, depth, heads, tails):
        """Signed edges of the tree path from ``a`` to ``b`` (boundary accumulates ``b - a``)."""
        up_a, up_b = [], []
        x, y = a, b
        while depth[x] > depth[y]:
            k, px = parent[x]
            up_a.append((k, x, px))
            x = px
        while depth[y] > depth[x]:
            k, py = parent[y]
            up_b.append((k, y, py))
            y = py
        while x != y:
            k, px = parent[x]
            up_a.append((k, x, px))
            x = px
            k, py = parent[y]
            up_b.append((k, y, py))
            y = py
        out = []
        # from a up to the meeting point: step x -> px
        for k, frm, to in up_a:
            out.append((k, 1 if heads[k] == to else -1))
        # from the meeting point down to b: step py -> y
        for k, to, frm in reversed(up_b):
            out.append((k, 1 if heads[k] == to else -1))
        return out

    @property
    def rank(self) -> int:
        return len(self.nontree)

    def coords(self, chain: dict, check: bool = True, label: str = "") -> list[int]:
        """Coordinates of a cycle: its coefficients on the non-tree edges."""
        out = [0] * self.rank
        for t, c in chain.items():
            j = self.position.get(self.index[t])
            if j is not None:
                out[j] += c
        if check and self.chain(out) != {k: v for k, v in chain.items() if v}:
            raise IllDefinedHom(f"chain is not in the kernel subcomplex {label}")
        return out

    def chain(self, coords: Sequence[int]) -> dict:
        out: dict = {}
        for c, cyc in zip(coords, self.cycles):
            if c:
                for t, v in cyc.items():
                    out[t] = out.get(t, 0) + c * v
        return {k: v for k, v in out.items() if v}


class KernelComplex:
    """Normalized bar chains of ``g`` in the kernel of up to two quotient projections.

    ``sides`` lists ``(projection, quotient identity)`` pairs, where the
    projection is an element map ``G -> Q``.  With no sides this is the full
    normalized bar complex, whose homology is ``H_*(G)``.
    """

    def __init__(self, g: FiniteGroup, sides: Sequence[tuple], top: int, label: str = ""):
        if len(sides) > 2:
            raise ValueError("at most two projections are supported")
        self.g = g
        self.sides = [(tuple(p), i) for p, i in sides]
        self.top = top
        self.label = label
        self.levels = [_Level(g, n, self.sides) for n in range(top + 1)]
        groups = [FgAbGroup.free(lv.rank) for lv in self.levels]
        diffs = [None]
        for n in range(1, top + 1):
            cols = [self.coords(n - 1, bar_boundary_chain(g, cyc)) for cyc in self.levels[n].cycles]
            mat = IntMatrix.from_columns(cols, groups[n - 1].ngens)
            diffs.append(AbHom(groups[n], groups[n - 1], mat, check=False))
        self.complex = ChainComplexAb(groups, diffs)

    def coords(self, n: int, chain: dict, check: bool = True) -> list[int]:
        return self.levels[n].coords(chain, check, f"{self.label} at degree {n}")

    def chain(self, n: int, coords: Sequence[int]) -> dict:
        return self.levels[n].chain(coords)

    def ranks(self) -> list[int]:
        return [lv.rank for lv in self.levels]

    def map_to(self, other: "KernelComplex", fmap: Sequence[int], n: int) -> IntMatrix:
        """Chain map at degree ``n`` induced by the group map ``fmap: self.g -> other.g``."""
        ident = other.g.identity
        cols = [other.coords(n, push_chain(cyc, fmap, ident)) for cyc in self.levels[n].cycles]
        return IntMatrix.from_columns(cols, other.levels[n].rank)


def bar_boundary_chain(g: FiniteGroup, chain: dict) -> dict:
    out: dict = {}
    for t, c in chain.items():
        for r, v in bar_boundary(g, t).items():
            out[r] = out.get(r, 0) + c * v
    return {k: v for k, v in out.items() if v}
