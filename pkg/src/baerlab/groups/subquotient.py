"""Abelian subquotients ``A/B`` of a finite group as ``FgAbGroup`` values.

Terms such as ``N/[N,G]`` or ``MN/M[N,G]`` live here: the class keeps the
link between group elements and vectors so that inclusion-induced maps
between subquotients become ``AbHom`` matrices.
"""

from __future__ import annotations

from typing import Callable, Sequence

from ..abelian import AbHom, FgAbGroup, IntMatrix
from ..errors import NotNormal
from .finite import FiniteGroup, Subgroup


class AbelianSubquotient:
    def __init__(self, top: Subgroup, bottom: Subgroup, label: str = ""):
        g = top.parent
        if bottom.parent is not g:
            raise ValueError("top and bottom must share a parent group")
        if not bottom.issubset(top):
            raise ValueError("bottom is not contained in top")
        if not bottom.is_normal(within=top):
            raise NotNormal("bottom is not normal in top")
        for x in top.elements:
            for y in top.elements:
                if g.commutator(x, y) not in bottom:
                    raise ValueError(f"subquotient {label or ''} is not abelian")
        self.parent = g
        self.top = top
        self.bottom = bottom
        self.label = label
        # coset index of each element of top
        coset = {}
        reps = []
        for x in top.elements:
            if x in coset:
                continue
            c = len(reps)
            reps.append(x)
            for b in bottom.elements:
                coset[g.mul(x, b)] = c
        self._coset = coset
        self._reps = reps
        m = len(reps)
        # greedy generating set, then BFS over the Cayley graph for vectors
        gens: list[int] = []
        reached = {0}
        for c in range(m):
            if c not in reached:
                gens.append(c)
                reached = self._span(gens)
        self.generators = [reps[c] for c in gens]
        k = len(gens)
        vec = {coset[g.identity]: (0,) * k}
        order = [coset[g.identity]]
        qi = 0
        while qi < len(order):
            c = order[qi]
            qi += 1
            for i, h in enumerate(gens):
                d = self._mul_cosets(c, h)
                if d not in vec:
                    v = list(vec[c])
                    v[i] += 1
                    vec[d] = tuple(v)
                    order.append(d)
        cols = []
        for c in order:
            for i, h in enumerate(gens):
                d = self._mul_cosets(c, h)
                col = {j: vec[c][j] - vec[d][j] for j in range(k)}
                col[i] = col.get(i, 0) + 1
                col = {j: v for j, v in col.items() if v}
                if col:
                    cols.append(col)
        self._vec = vec
        self.group = FgAbGroup(IntMatrix.from_sparse_columns(cols, k))

    def _mul_cosets(self, c: int, d: int) -> int:
        return self._coset[self.parent.mul(self._reps[c], self._reps[d])]

    def _span(self, gens: Sequence[int]) -> set[int]:
        seen = {self._coset[self.parent.identity]}
        frontier = list(seen)
        while frontier:
            nxt = []
            for c in frontier:
                for h in gens:
                    d = self._mul_cosets(c, h)
                    if d not in seen:
                        seen.add(d)
                        nxt.append(d)
            frontier = nxt
        return seen

    @property
    def order(self) -> int:
        return len(self._reps)

    def vector(self, x: int) -> list[int]:
        """Vector of the coset of ``x`` (an element of ``top``)."""
        return list(self._vec[self._coset[x]])

    def map_to(self, other: "AbelianSubquotient", fmap: Callable[[int], int] | None = None) -> AbHom:
        """Hom induced by ``fmap`` (identity by default) on representatives."""
        f = fmap or (lambda x: x)
        cols = []
        for x in self.generators:
            y = f(x)
            if y not in other.top:
                raise ValueError("induced map leaves the target subquotient")
            cols.append(other.vector(y))
        return AbHom(self.group, other.group, IntMatrix.from_columns(cols, other.group.ngens))

    def __repr__(self) -> str:
        return f"AbelianSubquotient({self.label or '?'} = {self.group})"


def abelian_structure(g: FiniteGroup) -> AbelianSubquotient:
    """An abelian finite group as an ``FgAbGroup`` with element vectors."""
    return AbelianSubquotient(g.whole(), g.trivial_subgroup(), "G")
