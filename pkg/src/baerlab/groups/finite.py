"""Finite groups by multiplication table, and their subgroups.

Elements are indices ``0..n-1``.  Subgroups are sorted index tuples with
the generators they were built from kept for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct
from typing import Iterable, Sequence

from ..errors import MismatchedParent, NotNormal
from .todd_coxeter import DEFAULT_MAX_COSETS, todd_coxeter
from .words import Presentation, Word

DEFAULT_MAX_ORDER = 64


class FiniteGroup:
    def __init__(self, names: Sequence[str], table: Sequence[Sequence[int]], check: bool = True):
        self.names = tuple(str(x) for x in names)
        self.table = tuple(tuple(r) for r in table)
        n = len(self.names)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("multiplication table must be square of size |G|")
        ident = [e for e in range(n) if all(self.table[e][x] == x for x in range(n))]
        if not ident:
            raise ValueError("multiplication table has no identity")
        self.identity = ident[0]
        self.generator_elements: tuple[int, ...] | None = None
        if check:
            self._validate()
        self.inverse = tuple(next(y for y in range(n) if self.table[x][y] == self.identity)
                             for x in range(n))

    def _validate(self) -> None:
        n = len(self.names)
        full = set(range(n))
        for r in self.table:
            if set(r) != full:
                raise ValueError("multiplication table is not a Latin square")
        for c in range(n):
            if {self.table[r][c] for r in range(n)} != full:
                raise ValueError("multiplication table is not a Latin square")
        t = self.table
        # Light's test: associativity only needs checking against a generating set
        gens = range(n) if n <= DEFAULT_MAX_ORDER else self._greedy_generators()
        for x in range(n):
            tx = t[x]
            for y in range(n):
                txy = tx[y]
                ty = t[y]
                for g in gens:
                    if t[txy][g] != tx[ty[g]]:
                        raise ValueError("multiplication table is not associative")

    def _greedy_generators(self) -> list[int]:
        gens: list[int] = []
        cur = {self.identity}
        for x in range(len(self.names)):
            if x not in cur:
                gens.append(x)
                cur = set(self._close(gens))
        return gens

    def _close(self, gens: Iterable[int]) -> list[int]:
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.table[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_presentation(cls, pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS,
                          max_order: int | None = None) -> "FiniteGroup":
        ct = todd_coxeter(pres, (), max_cosets)
        n = len(ct)
        if max_order is not None and n > max_order:
            from ..errors import SizeCapExceeded
            raise SizeCapExceeded(f"group of order {n} exceeds cap {max_order}")
        table = [[ct.act(i, ct.representatives[j]) for j in range(n)] for i in range(n)]
        names = [_letters_name(r, pres.generators) for r in ct.representatives]
        g = cls(names, table, check=n <= DEFAULT_MAX_ORDER)
        g.generator_elements = tuple(ct.act(0, [i + 1]) for i in range(len(pres.generators)))
        return g

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls([str(i) for i in range(n)], [[(i + j) % n for j in range(n)] for i in range(n)])

    @classmethod
    def trivial(cls) -> "FiniteGroup":
        return cls(["1"], [[0]])

    @classmethod
    def abelian(cls, orders: Sequence[int]) -> "FiniteGroup":
        """Z_{o1} x Z_{o2} x ... with elements named by coordinate tuples."""
        elems = list(iproduct(*(range(o) for o in orders)))
        pos = {e: i for i, e in enumerate(elems)}
        table = [[pos[tuple((a + b) % o for a, b, o in zip(x, y, orders))] for y in elems]
                 for x in elems]
        names = ["(" + ",".join(map(str, e)) + ")" for e in elems] if len(orders) != 1 else \
            [str(e[0]) for e in elems]
        return cls(names, table)

    # -- arithmetic -------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def prod(self, xs: Iterable[int]) -> int:
        out = self.identity
        for x in xs:
            out = self.table[out][x]
        return out

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        out = self.identity
        base = a
        while k:
            if k & 1:
                out = self.table[out][base]
            base = self.table[base][base]
            k >>= 1
        return out

    def commutator(self, a: int, b: int) -> int:
        """``[a, b] = a^-1 b^-1 a b``."""
        inv = self.inverse
        t = self.table
        return t[t[t[inv[a]][inv[b]]][a]][b]

    def conj(self, a: int, g: int) -> int:
        """``g^-1 a g``."""
        return self.table[self.table[self.inverse[g]][a]][g]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def evaluate(self, w: Word, assignment: Sequence[int]) -> int:
        out = self.identity
        for g, e in w:
            out = self.table[out][self.power(assignment[g], e)]
        return out

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def element(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"no element named {name!r}") from None

    # -- subgroups --------------------------------------------------------

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)), tuple(range(self.order)))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,), ())

    def __repr__(self) -> str:
        return f"<FiniteGroup of order {self.order}>"


def _letters_name(ls: Sequence[int], gens: Sequence[str]) -> str:
    if not ls:
        return "1"
    runs: list[list[int]] = []
    for x in ls:
        if runs and runs[-1][0] == x:
            runs[-1][1] += 1
        else:
            runs.append([x, 1])
    parts = []
    for x, k in runs:
        e = k if x > 0 else -k
        name = gens[abs(x) - 1]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "".join(parts) if all(len(g) == 1 for g in gens) else " ".join(parts)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(compare=False, repr=False)
    elements: tuple[int, ...]
    gens: tuple[int, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self._set

    @cached_property
    def _set(self) -> frozenset:
        return frozenset(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def issubset(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def is_normal(self, within: "Subgroup | None" = None) -> bool:
        g = self.parent
        conj_by = range(g.order) if within is None else within.elements
        s = self._set
        gens = self.gens or self.elements
        return all(g.conj(a, x) in s for x in conj_by for a in gens)

    def names(self) -> list[str]:
        return [self.parent.names[i] for i in self.elements]

    def __repr__(self) -> str:
        return "Subgroup{" + ", ".join(self.names()) + "}"


def _check_parent(*subs: Subgroup) -> FiniteGroup:
    g = subs[0].parent
    for s in subs[1:]:
        if s.parent is not g:
            raise MismatchedParent("subgroups belong to different parent groups")
    return g


def closure(g: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = tuple(sorted(set(gens)))
    return Subgroup(g, tuple(g._close(gens)), gens)


def normal_closure(g: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    gens = set(gens)
    conj = {g.conj(a, x) for a in gens for x in range(g.order)}
    return closure(g, conj)


def commutator_subgroup(a: Subgroup, b: Subgroup) -> Subgroup:
    """Closure of all ``[x, y]`` with ``x`` in ``a`` and ``y`` in ``b``."""
    g = _check_parent(a, b)
    return closure(g, {g.commutator(x, y) for x in a.elements for y in b.elements})


def product(a: Subgroup, b: Subgroup) -> Subgroup:
    g = _check_parent(a, b)
    if not (a.is_normal() or b.is_normal()):
        raise NotNormal("product of two non-normal subgroups need not be a subgroup")
    elems = {g.mul(x, y) for x in a.elements for y in b.elements}
    return Subgroup(g, tuple(elems), tuple(sorted(set(a.gens or a.elements) | set(b.gens or b.elements))))


def intersection(a: Subgroup, b: Subgroup) -> Subgroup:
    g = _check_parent(a, b)
    elems = tuple(sorted(a._set & b._set))
    return Subgroup(g, elems, ())


def join(a: Subgroup, b: Subgroup) -> Subgroup:
    g = _check_parent(a, b)
    return closure(g, set(a.elements) | set(b.elements))


def centre(g: FiniteGroup) -> Subgroup:
    n = g.order
    return Subgroup(g, tuple(x for x in range(n) if all(g.mul(x, y) == g.mul(y, x) for y in range(n))))


def all_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, as the join-closure of the cyclic subgroups."""
    cyc = {closure(g, [x]).elements for x in range(g.order)}
    subs = set(cyc)
    frontier = set(cyc)
    while frontier:
        new = set()
        for a in frontier:
            for c in cyc:
                if set(c) <= set(a):
                    continue
                j = tuple(g._close(set(a) | set(c)))
                if j not in subs:
                    new.add(j)
        subs |= new
        frontier = new
    return [Subgroup(g, s) for s in sorted(subs, key=lambda s: (len(s), s))]


def normal_subgroups(g: FiniteGroup) -> list[Subgroup]:
    return [s for s in all_subgroups(g) if s.is_normal()]


@dataclass(frozen=True)
class Quotient:
    """``G/K`` with the projection ``G -> G/K`` as an index list."""

    group: FiniteGroup
    projection: tuple[int, ...]
    # representative element of G for each coset
    lifts: tuple[int, ...]


def quotient_group(g: FiniteGroup, k: Subgroup) -> Quotient:
    """Coset multiplication table; cosets are named by their least element."""
    if k.parent is not g:
        raise MismatchedParent("subgroup does not belong to the group")
    if not k.is_normal():
        raise NotNormal("quotient by a non-normal subgroup")
    proj = [-1] * g.order
    lifts = []
    for x in range(g.order):
        if proj[x] >= 0:
            continue
        c = len(lifts)
        lifts.append(x)
        for y in k.elements:
            proj[g.mul(x, y)] = c
    m = len(lifts)
    table = [[proj[g.mul(lifts[i], lifts[j])] for j in range(m)] for i in range(m)]
    names = [g.names[x] for x in lifts]
    q = FiniteGroup(names, table, check=False)
    return Quotient(q, tuple(proj), tuple(lifts))


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Elements ``(x, y)`` indexed as ``x * |b| + y``."""
    nb = b.order
    n = a.order * nb
    table = [[a.mul(i // nb, j // nb) * nb + b.mul(i % nb, j % nb) for j in range(n)]
             for i in range(n)]
    names = [f"({a.names[i // nb]},{b.names[i % nb]})" for i in range(n)]
    return FiniteGroup(names, table, check=False)


def is_homomorphism(src: FiniteGroup, dst: FiniteGroup, fmap: Sequence[int]) -> bool:
    if len(fmap) != src.order:
        return False
    return all(fmap[src.mul(a, b)] == dst.mul(fmap[a], fmap[b])
               for a in range(src.order) for b in range(src.order))


def image(fmap: Sequence[int], sub: Subgroup, dst: FiniteGroup) -> set[int]:
    return {fmap[x] for x in sub.elements}
