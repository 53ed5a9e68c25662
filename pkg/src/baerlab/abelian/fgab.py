"""Finitely generated abelian groups as cokernels of integer matrices.

A group on ``g`` generators is ``Z^g / colspan(presentation)``; elements
are integer vectors of length ``g``.  Homomorphisms are matrices acting on
those vectors (``target.ngens x source.ngens``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod
from typing import Iterable, Sequence

from ..errors import IllDefinedHom, NonDirected
from .matrix import IntMatrix
from .smith import SmithDecomposition, kernel_basis, smith, solve_matrix


class FgAbGroup:
    def __init__(self, presentation: IntMatrix):
        self.presentation = presentation

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_cyclics(cls, orders: Iterable[int]) -> "FgAbGroup":
        """Direct sum of cyclic groups; order 0 means an infinite cyclic summand."""
        orders = list(orders)
        if any(o < 0 for o in orders):
            raise ValueError("cyclic orders must be nonnegative")
        cols = [{i: o} for i, o in enumerate(orders) if o]
        return cls(IntMatrix.from_sparse_columns(cols, len(orders)))

    @classmethod
    def from_invariants(cls, factors: Sequence[int] = (), rank: int = 0) -> "FgAbGroup":
        return cls.from_cyclics(list(factors) + [0] * rank)

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(IntMatrix.zeros(rank, 0))

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(IntMatrix.zeros(0, 0))

    @classmethod
    def cyclic(cls, n: int) -> "FgAbGroup":
        return cls.from_cyclics([n])

    # -- invariants -------------------------------------------------------

    @property
    def ngens(self) -> int:
        return self.presentation.nrows

    @cached_property
    def smith(self) -> SmithDecomposition:
        return smith(self.presentation)

    @cached_property
    def _coord_layout(self) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        # positions of torsion coordinates, their moduli, and free positions
        d = self.smith
        tpos = tuple(i for i, s in enumerate(d.diag) if s > 1)
        mods = tuple(d.diag[i] for i in tpos)
        fpos = tuple(range(d.rank, self.ngens))
        return tpos, mods, fpos

    @property
    def rank(self) -> int:
        return len(self._coord_layout[2])

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self._coord_layout[1]

    @property
    def canonical(self) -> tuple[int, tuple[int, ...]]:
        return (self.rank, self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def is_free(self) -> bool:
        return not self.invariant_factors

    @property
    def order(self) -> int | None:
        """Cardinality, or ``None`` for an infinite group."""
        return prod(self.invariant_factors) if self.rank == 0 else None

    @property
    def exponent(self) -> int | None:
        if self.rank:
            return None
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def coords(self, x: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates: torsion parts reduced mod d_i, then free parts."""
        if len(x) != self.ngens:
            raise ValueError("element length does not match generator count")
        z = self.smith.u.apply(list(x))
        tpos, mods, fpos = self._coord_layout
        return tuple(z[i] % m for i, m in zip(tpos, mods)) + tuple(z[i] for i in fpos)

    def is_zero(self, x: Sequence[int]) -> bool:
        return not any(self.coords(x))

    def element_order(self, x: Sequence[int]) -> int:
        """Order of ``x``; 0 for elements of infinite order."""
        c = self.coords(x)
        k = len(self._coord_layout[1])
        if any(c[k:]):
            return 0
        out = 1
        for v, m in zip(c, self._coord_layout[1]):
            o = m // gcd(v, m)
            out = out * o // gcd(out, o)
        return out

    @cached_property
    def to_canonical(self) -> IntMatrix:
        """Rows map presentation coordinates to canonical coordinates."""
        tpos, _, fpos = self._coord_layout
        return self.smith.u.select_rows(list(tpos) + list(fpos))

    @cached_property
    def from_canonical(self) -> IntMatrix:
        """Columns are the canonical generators in presentation coordinates."""
        tpos, _, fpos = self._coord_layout
        return self.smith.u_inv.select_columns(list(tpos) + list(fpos))

    def canonical_group(self) -> "FgAbGroup":
        return FgAbGroup.from_invariants(self.invariant_factors, self.rank)

    def canonical_iso(self) -> tuple["AbHom", "AbHom"]:
        """Mutually inverse isomorphisms ``self -> canon`` and ``canon -> self``."""
        c = self.canonical_group()
        return AbHom(self, c, self.to_canonical), AbHom(c, self, self.from_canonical)

    def elements(self) -> list[tuple[int, ...]]:
        """All elements of a finite group in canonical coordinates."""
        if self.rank:
            raise ValueError("infinite group has no element list")
        out = [()]
        for m in self.invariant_factors:
            out = [e + (i,) for e in out for i in range(m)]
        return out

    def to_json(self) -> dict:
        return {"rank": self.rank, "factors": list(self.invariant_factors)}

    def tsv(self) -> str:
        return f"{self.rank}:" + ",".join(map(str, self.invariant_factors))

    def __str__(self) -> str:
        parts = [f"Z_{d}" for d in self.invariant_factors]
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"FgAbGroup<{self}>"


class AbHom:
    """Homomorphism given by its action on generators; checked eagerly."""

    def __init__(self, source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix, check: bool = True):
        if matrix.shape != (target.ngens, source.ngens):
            raise ValueError(f"hom matrix shape {matrix.shape} does not match "
                             f"({target.ngens}, {source.ngens})")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check:
            images = matrix @ source.presentation
            for j in range(images.ncols):
                if not target.is_zero(images.column(j)):
                    raise IllDefinedHom(f"relation {j} of the source does not map to zero")

    @classmethod
    def identity(cls, g: FgAbGroup) -> "AbHom":
        return cls(g, g, IntMatrix.identity(g.ngens), check=False)

    @classmethod
    def zero(cls, a: FgAbGroup, b: FgAbGroup) -> "AbHom":
        return cls(a, b, IntMatrix.zeros(b.ngens, a.ngens), check=False)

    def __call__(self, x: Sequence[int]) -> list[int]:
        return self.matrix.apply(list(x))

    def then(self, other: "AbHom") -> "AbHom":
        """``other o self``."""
        return other @ self

    def __matmul__(self, other: "AbHom") -> "AbHom":
        # (self @ other)(x) = self(other(x))
        if other.target is not self.source and not _same_presentation(other.target, self.source):
            raise ValueError("composition of non-composable homomorphisms")
        return AbHom(other.source, self.target, self.matrix @ other.matrix, check=False)

    def equals(self, other: "AbHom") -> bool:
        if not (_same_presentation(self.source, other.source)
                and _same_presentation(self.target, other.target)):
            return False
        diff = self.matrix - other.matrix
        return all(self.target.is_zero(diff.column(j)) for j in range(diff.ncols))

    def is_zero(self) -> bool:
        return all(self.target.is_zero(self.matrix.column(j)) for j in range(self.matrix.ncols))

    @cached_property
    def parts(self) -> "HomParts":
        return hom_parts(self)

    def is_injective(self) -> bool:
        return self.parts.kernel.is_trivial

    def is_surjective(self) -> bool:
        return self.parts.cokernel.is_trivial

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def __repr__(self) -> str:
        return f"AbHom({self.source} -> {self.target})"


def _same_presentation(a: FgAbGroup, b: FgAbGroup) -> bool:
    return a is b or a.presentation == b.presentation


@dataclass(frozen=True)
class HomParts:
    kernel: FgAbGroup
    kernel_incl: AbHom
    image: FgAbGroup
    image_proj: AbHom
    image_incl: AbHom
    cokernel: FgAbGroup
    coker_proj: AbHom


def preimage_lattice(f: AbHom) -> IntMatrix:
    """Basis (columns) of ``{x in Z^a : f(x) = 0 in target}``."""
    tgt = f.target
    tpos, mods, fpos = tgt._coord_layout
    fu = tgt.smith.u @ f.matrix
    a = f.source.ngens
    rows = [fu.row_dict(i) for i in list(tpos) + list(fpos)]
    k = len(tpos)
    h_rows = []
    for idx, r in enumerate(rows):
        d = dict(r)
        if idx < k:
            d[a + idx] = mods[idx]
        h_rows.append(d)
    h = IntMatrix(len(h_rows), a + k, h_rows)
    kb = kernel_basis(h)
    return kb.select_rows(range(a))


def hom_parts(f: AbHom) -> HomParts:
    """Kernel, image and cokernel of ``f`` with their structure maps."""
    src, tgt = f.source, f.target
    lat = preimage_lattice(f)
    rel = solve_matrix(lat, src.presentation)
    if rel is None:
        raise IllDefinedHom("source relations are not in the kernel lattice")
    kernel = FgAbGroup(rel)
    kernel_incl = AbHom(kernel, src, lat, check=False)
    image = FgAbGroup(lat)
    image_proj = AbHom(src, image, IntMatrix.identity(src.ngens), check=False)
    image_incl = AbHom(image, tgt, f.matrix, check=False)
    cokernel = FgAbGroup(tgt.presentation.hstack(f.matrix))
    coker_proj = AbHom(tgt, cokernel, IntMatrix.identity(tgt.ngens), check=False)
    return HomParts(kernel, kernel_incl, image, image_proj, image_incl, cokernel, coker_proj)


def is_isomorphic(a: FgAbGroup, b: FgAbGroup) -> bool:
    return a.canonical == b.canonical


def canonical_form(g: FgAbGroup) -> tuple[int, tuple[int, ...]]:
    return g.canonical


def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    if not groups:
        return FgAbGroup.trivial()
    return FgAbGroup(IntMatrix.block_diag(*(g.presentation for g in groups)))


def direct_sum_hom(*homs: AbHom) -> AbHom:
    return AbHom(direct_sum(*(h.source for h in homs)), direct_sum(*(h.target for h in homs)),
                 IntMatrix.block_diag(*(h.matrix for h in homs)), check=False)


def _cyclic_orders(g: FgAbGroup) -> list[int]:
    return list(g.invariant_factors) + [0] * g.rank


def tensor(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """``a (x) b``; Z_m (x) Z_n = Z_gcd(m, n) with Z acting as unit."""
    out = [gcd(m, n) for m in _cyclic_orders(a) for n in _cyclic_orders(b)]
    return FgAbGroup.from_cyclics(out).canonical_group()


def tor(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """``Tor(a, b)``; only torsion pairs contribute, Z_gcd(m, n) each."""
    out = [gcd(m, n) for m in a.invariant_factors for n in b.invariant_factors]
    return FgAbGroup.from_cyclics(out).canonical_group()


def exterior_square(a: FgAbGroup) -> FgAbGroup:
    """``a (x) a`` modulo all ``x (x) x``, computed from the bilinear presentation."""
    orders = _cyclic_orders(a)
    g = len(orders)
    cols = []

    def idx(i, j):
        return i * g + j

    for i in range(g):
        for j in range(g):
            if orders[i]:
                cols.append({idx(i, j): orders[i]})
            if orders[j]:
                cols.append({idx(i, j): orders[j]})
    for i in range(g):
        cols.append({idx(i, i): 1})
        for j in range(i + 1, g):
            cols.append({idx(i, j): 1, idx(j, i): 1})
    return FgAbGroup(IntMatrix.from_sparse_columns(cols, g * g)).canonical_group()


@dataclass
class DirectedSystemAb:
    """Finite upward-directed system of abelian groups.

    ``leq`` lists comparable pairs ``(i, j)`` with ``i <= j``; reflexive and
    transitive closure is added.  ``transitions[(i, j)]`` is required for every
    strict comparable pair.
    """

    indices: tuple
    leq: frozenset
    objects: dict
    transitions: dict

    def __post_init__(self):
        self.indices = tuple(self.indices)
        rel = set(self.leq) | {(i, i) for i in self.indices}
        changed = True
        while changed:
            changed = False
            for (i, j) in list(rel):
                for (k, l) in list(rel):
                    if j == k and (i, l) not in rel:
                        rel.add((i, l))
                        changed = True
        for (i, j) in rel:
            if i != j and (j, i) in rel:
                raise NonDirected(f"{i} and {j} are mutually comparable")
        self.leq = frozenset(rel)
        for i in self.indices:
            for j in self.indices:
                if not any((i, k) in rel and (j, k) in rel for k in self.indices):
                    raise NonDirected(f"no upper bound for {i} and {j}")
        for (i, j) in rel:
            if i != j and (i, j) not in self.transitions:
                raise ValueError(f"missing transition {i} -> {j}")

    def transition(self, i, j) -> AbHom:
        if i == j:
            return AbHom.identity(self.objects[i])
        return self.transitions[(i, j)]

    def check_functoriality(self) -> list[tuple]:
        """Triples ``(i, j, k)`` where composition fails."""
        bad = []
        for i in self.indices:
            for j in self.indices:
                for k in self.indices:
                    if (i, j) in self.leq and (j, k) in self.leq and i != j and j != k:
                        comp = self.transition(j, k) @ self.transition(i, j)
                        if not comp.equals(self.transition(i, k)):
                            bad.append((i, j, k))
        return bad

    def top(self):
        for k in self.indices:
            if all((i, k) in self.leq for i in self.indices):
                return k
        return None


def colimit(system: DirectedSystemAb) -> FgAbGroup:
    """Coequalizer presentation: sum of all objects modulo ``x - t(x)``."""
    offs = {}
    total = 0
    for i in system.indices:
        offs[i] = total
        total += system.objects[i].ngens
    cols = []
    for i in system.indices:
        pres = system.objects[i].presentation
        for c in pres.column_dicts():
            cols.append({offs[i] + r: v for r, v in c.items()})
    for (i, j) in sorted(system.leq, key=lambda p: (system.indices.index(p[0]),
                                                      system.indices.index(p[1]))):
        if i == j:
            continue
        t = system.transition(i, j).matrix
        tcols = t.column_dicts()
        for g in range(system.objects[i].ngens):
            col = {offs[i] + g: 1}
            for r, v in tcols[g].items():
                col[offs[j] + r] = col.get(offs[j] + r, 0) - v
            cols.append(col)
    return FgAbGroup(IntMatrix.from_sparse_columns(cols, total)).canonical_group()
