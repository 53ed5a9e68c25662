"""Truncated simplicial abelian groups, chain complexes, identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..abelian import AbHom, FgAbGroup, IntMatrix, smith
from ..abelian.smith import SmithDecomposition, solve_with
from ..errors import IllDefinedHom


@dataclass(eq=False)
class TruncSimplicialAb:
    """Levels ``0..T`` with ``faces[n][i]: X_n -> X_{n-1}`` and ``degens[n][i]: X_n -> X_{n+1}``."""

    levels: list
    faces: list
    degens: list

    def __post_init__(self):
        T = len(self.levels) - 1
        if T < 0:
            raise ValueError("need at least level 0")
        if len(self.faces) != T + 1 or self.faces[0]:
            raise ValueError("faces[n] must hold n + 1 maps for n >= 1 and none at level 0")
        for n in range(1, T + 1):
            if len(self.faces[n]) != n + 1:
                raise ValueError(f"level {n} needs {n + 1} face maps")
        if len(self.degens) != T or any(len(self.degens[n]) != n + 1 for n in range(T)):
            raise ValueError("degens[n] must hold n + 1 maps for n < T")

    @property
    def T(self) -> int:
        return len(self.levels) - 1

    def face(self, n: int, i: int) -> AbHom:
        return self.faces[n][i]

    def degen(self, n: int, i: int) -> AbHom:
        return self.degens[n][i]

    @classmethod
    def constant(cls, a: FgAbGroup, T: int) -> "TruncSimplicialAb":
        idm = AbHom.identity(a)
        return cls([a] * (T + 1), [[]] + [[idm] * (n + 1) for n in range(1, T + 1)],
                   [[idm] * (n + 1) for n in range(T)])

    def truncate(self, T: int) -> "TruncSimplicialAb":
        if T > self.T:
            raise ValueError("cannot extend a truncation")
        return TruncSimplicialAb(self.levels[:T + 1], self.faces[:T + 1], self.degens[:T])

    def with_face(self, n: int, i: int, hom: AbHom) -> "TruncSimplicialAb":
        faces = [list(f) for f in self.faces]
        faces[n][i] = hom
        return TruncSimplicialAb(list(self.levels), faces, [list(d) for d in self.degens])


@dataclass(frozen=True)
class IdentityReport:
    violations: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def _homs_equal(f: AbHom, g: AbHom) -> bool:
    diff = f.matrix - g.matrix
    return all(f.target.is_zero(diff.column(j)) for j in range(diff.ncols))


def check_simplicial_identities(x) -> IdentityReport:
    """All three identity families on every composable pair within the truncation.

    Violations are tuples ``(family, level, i, j)`` where ``level`` is the
    source level of the composite.  Works for abelian and finite-group
    objects alike (both expose ``face``, ``degen``, ``T`` and ``compose``).
    """
    eq = getattr(x, "maps_equal", None) or _homs_equal
    comp = getattr(x, "compose", None) or (lambda f, g: f @ g)
    ident = getattr(x, "identity_at", None) or (lambda n: AbHom.identity(x.levels[n]))
    bad = []
    T = x.T
    # d_i d_j = d_{j-1} d_i for i < j
    for n in range(2, T + 1):
        for j in range(n + 1):
            for i in range(j):
                if not eq(comp(x.face(n - 1, i), x.face(n, j)), comp(x.face(n - 1, j - 1), x.face(n, i))):
                    bad.append(("dd", n, i, j))
    # s_i s_j = s_{j+1} s_i for i <= j
    for n in range(0, T - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                if not eq(comp(x.degen(n + 1, i), x.degen(n, j)), comp(x.degen(n + 1, j + 1), x.degen(n, i))):
                    bad.append(("ss", n, i, j))
    # d_j s_i
    for n in range(0, T):
        for i in range(n + 1):
            for j in range(n + 2):
                lhs = comp(x.face(n + 1, j), x.degen(n, i))
                if j < i:
                    rhs = comp(x.degen(n - 1, i - 1), x.face(n, j))
                elif j in (i, i + 1):
                    rhs = ident(n)
                else:
                    rhs = comp(x.degen(n - 1, i), x.face(n, j - 1))
                if not eq(lhs, rhs):
                    bad.append(("ds", n, i, j))
    return IdentityReport(tuple(bad))


@dataclass(eq=False)
class ChainComplexAb:
    """Groups ``C_0..C_L`` with ``diffs[n]: C_n -> C_{n-1}`` (``diffs[0]`` is ``None``)."""

    groups: list
    diffs: list

    def __post_init__(self):
        if len(self.diffs) != len(self.groups):
            raise ValueError("need one differential slot per group")
        if self.diffs and self.diffs[0] is not None:
            raise ValueError("diffs[0] must be None")

    @property
    def length(self) -> int:
        return len(self.groups) - 1

    def group(self, n: int) -> FgAbGroup:
        if 0 <= n < len(self.groups):
            return self.groups[n]
        return FgAbGroup.trivial()

    def diff(self, n: int) -> AbHom:
        """``C_n -> C_{n-1}``, zero outside the stored range."""
        if 1 <= n < len(self.groups):
            return self.diffs[n]
        return AbHom.zero(self.group(n), self.group(n - 1))

    def check_dd(self) -> list[int]:
        return [n for n in range(2, len(self.groups))
                if not (self.diffs[n - 1] @ self.diffs[n]).is_zero()]

    def is_free(self) -> bool:
        return all(g.is_free for g in self.groups)

    @classmethod
    def from_matrices(cls, ranks: Sequence[int], mats: Sequence[Sequence[Sequence[int]]]) -> "ChainComplexAb":
        """Free complex from ranks and boundary matrices ``d_1, d_2, ...``."""
        groups = [FgAbGroup.free(r) for r in ranks]
        diffs = [None]
        for n in range(1, len(ranks)):
            m = IntMatrix.from_rows(mats[n - 1], ncols=ranks[n]) if ranks[n - 1] else \
                IntMatrix.zeros(0, ranks[n])
            diffs.append(AbHom(groups[n], groups[n - 1], m))
        return cls(groups, diffs)


class _Expresser:
    """Express vectors of an ambient group in terms of a generating matrix ``J``."""

    def __init__(self, j: IntMatrix, ambient: FgAbGroup):
        self.k = j.ncols
        self.dec: SmithDecomposition = smith(j.hstack(ambient.presentation))

    def __call__(self, y: Sequence[int]) -> list[int]:
        x = solve_with(self.dec, y)
        if x is None:
            raise IllDefinedHom("vector is not in the subgroup")
        return x[: self.k]

    def matrix(self, ys: IntMatrix) -> IntMatrix:
        return IntMatrix.from_columns([self(c) for c in ys.columns()], self.k)


@dataclass(eq=False)
class HomologyData:
    """``H_n = Z / B`` presented on a generating set of cycles ``Z``."""

    group: FgAbGroup
    cycles: IntMatrix  # columns in C_n coordinates
    ambient: FgAbGroup
    _expresser: _Expresser = field(repr=False)

    def express_cycle(self, z: Sequence[int]) -> list[int]:
        return self._expresser(z)


def chain_homology(c: ChainComplexAb, n: int) -> HomologyData:
    cn = c.group(n)
    if n >= 1 and n <= c.length:
        parts = c.diff(n).parts
        zgrp, zinc = parts.kernel, parts.kernel_incl.matrix
    else:
        zgrp, zinc = cn, IntMatrix.identity(cn.ngens)
    ex = _Expresser(zinc, cn)
    nxt = c.diff(n + 1)
    bz = ex.matrix(nxt.matrix) if nxt.matrix.ncols else IntMatrix.zeros(zinc.ncols, 0)
    h = FgAbGroup(zgrp.presentation.hstack(bz))
    return HomologyData(h, zinc, cn, ex)


def induced_on_homology(src: HomologyData, dst: HomologyData, chain_map: IntMatrix) -> AbHom:
    """Map on homology induced by a chain map given at this degree."""
    imgs = chain_map @ src.cycles
    cols = [dst.express_cycle(col) for col in imgs.columns()]
    return AbHom(src.group, dst.group, IntMatrix.from_columns(cols, dst.group.ngens))
