"""Truncated simplicial groups with finite levels, and their low homotopy."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from ..errors import DegreeOutOfRange, IdentityViolation, NotAHomomorphism, Pi1NotAbelian
from ..groups.finite import (FiniteGroup, Subgroup, closure, direct_product, is_homomorphism,
                             normal_closure, quotient_group)
from ..groups.subquotient import AbelianSubquotient
from .objects import TruncSimplicialAb, check_simplicial_identities


@dataclass(eq=False)
class TruncSimplicialGrp:
    """Finite groups ``levels[n]`` with faces and degeneracies as element maps (tuples)."""

    levels: list
    faces: list
    degens: list

    def __post_init__(self):
        T = len(self.levels) - 1
        if len(self.faces) != T + 1 or self.faces[0] or \
                any(len(self.faces[n]) != n + 1 for n in range(1, T + 1)):
            raise ValueError("faces[n] must hold n + 1 maps")
        if len(self.degens) != T or any(len(self.degens[n]) != n + 1 for n in range(T)):
            raise ValueError("degens[n] must hold n + 1 maps")
        self.faces = [[tuple(f) for f in fs] for fs in self.faces]
        self.degens = [[tuple(f) for f in fs] for fs in self.degens]

    @property
    def T(self) -> int:
        return len(self.levels) - 1

    def face(self, n: int, i: int) -> tuple:
        return self.faces[n][i]

    def degen(self, n: int, i: int) -> tuple:
        return self.degens[n][i]

    @staticmethod
    def compose(f: tuple, g: tuple) -> tuple:
        return tuple(f[x] for x in g)

    @staticmethod
    def maps_equal(f: tuple, g: tuple) -> bool:
        return f == g

    def identity_at(self, n: int) -> tuple:
        return tuple(range(self.levels[n].order))

    def check_homomorphisms(self) -> None:
        for n in range(1, self.T + 1):
            for i, f in enumerate(self.faces[n]):
                if not is_homomorphism(self.levels[n], self.levels[n - 1], f):
                    raise NotAHomomorphism(f"face d_{i} at level {n} is not a homomorphism")
        for n in range(self.T):
            for i, f in enumerate(self.degens[n]):
                if not is_homomorphism(self.levels[n], self.levels[n + 1], f):
                    raise NotAHomomorphism(f"degeneracy s_{i} at level {n} is not a homomorphism")

    @classmethod
    def constant(cls, g: FiniteGroup, T: int) -> "TruncSimplicialGrp":
        idm = tuple(range(g.order))
        return cls([g] * (T + 1), [[]] + [[idm] * (n + 1) for n in range(1, T + 1)],
                   [[idm] * (n + 1) for n in range(T)])


def _kernel(g: FiniteGroup, f: tuple, target_identity: int) -> set:
    return {x for x in range(g.order) if f[x] == target_identity}


def _moore_level(x: TruncSimplicialGrp, n: int) -> Subgroup:
    g = x.levels[n]
    if n == 0:
        return g.whole()
    e = x.levels[n - 1].identity
    keep = set(range(g.order))
    for i in range(n):
        keep &= _kernel(g, x.face(n, i), e)
    return Subgroup(g, tuple(sorted(keep)))


def homotopy_group_finite(x: TruncSimplicialGrp, n: int, check: bool = True):
    """``pi_0`` as a finite group, ``pi_1`` as an abelian group (commutativity is checked)."""
    if n not in (0, 1):
        raise ValueError("finite homotopy is available in degrees 0 and 1")
    if x.T < n + 1:
        raise DegreeOutOfRange(f"degree {n} needs level {n + 1}")
    if check:
        rep = check_simplicial_identities(x)
        if not rep.ok:
            raise IdentityViolation(f"simplicial identities fail: {list(rep.violations)[:5]}")
        x.check_homomorphisms()
    if n == 0:
        g0 = x.levels[0]
        n1 = _moore_level(x, 1)
        bnd = normal_closure(g0, {x.face(1, 1)[a] for a in n1.elements})
        return quotient_group(g0, bnd).group
    g1 = x.levels[1]
    n1 = _moore_level(x, 1)
    e0 = x.levels[0].identity
    z1 = Subgroup(g1, tuple(a for a in n1.elements if x.face(1, 1)[a] == e0))
    n2 = _moore_level(x, 2)
    b1 = closure(g1, {x.face(2, 2)[a] for a in n2.elements})
    if not b1.issubset(z1):
        raise IdentityViolation("boundaries are not cycles")
    for a in z1.elements:
        for b in z1.elements:
            if g1.commutator(a, b) not in b1:
                raise Pi1NotAbelian("pi_1 is not abelian; the input is not a simplicial group")
    return AbelianSubquotient(z1, b1, "pi_1").group.canonical_group()


def product_simplicial(x: TruncSimplicialGrp, y: TruncSimplicialGrp) -> TruncSimplicialGrp:
    T = min(x.T, y.T)
    levels = [direct_product(x.levels[n], y.levels[n]) for n in range(T + 1)]

    def pm(f, g, nsrc, ndst):
        bs, bd = y.levels[nsrc].order, y.levels[ndst].order
        return tuple(f[i // bs] * bd + g[i % bs] for i in range(x.levels[nsrc].order * bs))

    faces = [[]] + [[pm(x.face(n, i), y.face(n, i), n, n - 1) for i in range(n + 1)]
                    for n in range(1, T + 1)]
    degens = [[pm(x.degen(n, i), y.degen(n, i), n, n + 1) for i in range(n + 1)] for n in range(T)]
    return TruncSimplicialGrp(levels, faces, degens)


def from_abelian(x: TruncSimplicialAb, max_order: int = 4096) -> TruncSimplicialGrp:
    """Enumerate a simplicial abelian group with finite levels as finite groups."""
    groups, elems = [], []
    for lev in x.levels:
        if not lev.is_finite or lev.order > max_order:
            raise ValueError("levels must be finite and small")
        canon = lev.canonical_group()
        orders = list(canon.invariant_factors)
        g = FiniteGroup.abelian(orders) if orders else FiniteGroup.trivial()
        groups.append(g)
        elems.append(orders)
    to_can = [lev.to_canonical for lev in x.levels]
    from_can = [lev.from_canonical for lev in x.levels]

    def index(vec, orders):
        idx = 0
        for v, o in zip(vec, orders):
            idx = idx * o + v % o
        return idx

    def tabulate(hom, a, b):
        out = []
        for el in iproduct(*(range(o) for o in elems[a])):
            src = from_can[a].apply(list(el))
            img = hom.matrix.apply(src)
            can = to_can[b].apply(img)
            out.append(index(can, elems[b]))
        return tuple(out)

    faces = [[]] + [[tabulate(x.face(n, i), n, n - 1) for i in range(n + 1)] for n in range(1, x.T + 1)]
    degens = [[tabulate(x.degen(n, i), n, n + 1) for i in range(n + 1)] for n in range(x.T)]
    return TruncSimplicialGrp(groups, faces, degens)


def nerve(a: FiniteGroup, T: int) -> TruncSimplicialGrp:
    """Nerve of an abelian group: level ``n`` is ``A^n``; ``pi_1`` is ``A``."""
    if not a.is_abelian:
        raise ValueError("the nerve is a simplicial group only for abelian groups")
    levels = [FiniteGroup.trivial()]
    tuples = [[()]]
    for n in range(1, T + 1):
        lv = a if n == 1 else direct_product(levels[-1], a)
        levels.append(lv)
        tuples.append(list(iproduct(range(a.order), repeat=n)))
    pos = [{t: i for i, t in enumerate(ts)} for ts in tuples]

    def face_map(n, i):
        out = []
        for t in tuples[n]:
            if i == 0:
                r = t[1:]
            elif i == n:
                r = t[:-1]
            else:
                r = t[: i - 1] + (a.mul(t[i - 1], t[i]),) + t[i + 1:]
            out.append(pos[n - 1][r])
        return tuple(out)

    def degen_map(n, i):
        return tuple(pos[n + 1][t[:i] + (a.identity,) + t[i:]] for t in tuples[n])

    faces = [[]] + [[face_map(n, i) for i in range(n + 1)] for n in range(1, T + 1)]
    degens = [[degen_map(n, i) for i in range(n + 1)] for n in range(T)]
    return TruncSimplicialGrp(levels, faces, degens)
