"""Levelwise tensor products, Eilenberg-Zilber and Kunneth comparisons."""

from __future__ import annotations

from dataclasses import dataclass

from ..abelian import AbHom, FgAbGroup, IntMatrix, direct_sum, is_isomorphic, tensor, tor
from ..errors import DegreeOutOfRange, NotFree
from .moore import _require_identities, moore_data
from .objects import ChainComplexAb, TruncSimplicialAb, chain_homology


def tensor_group(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """``a (x) b`` presented on the generator pairs ``(i, j)`` at index ``i * b.ngens + j``."""
    rel = IntMatrix.kron(a.presentation, IntMatrix.identity(b.ngens)).hstack(
        IntMatrix.kron(IntMatrix.identity(a.ngens), b.presentation))
    return FgAbGroup(rel)


def tensor_hom(f: AbHom, g: AbHom, src: FgAbGroup, dst: FgAbGroup) -> AbHom:
    return AbHom(src, dst, IntMatrix.kron(f.matrix, g.matrix), check=False)


def tensor_diagonal(x: TruncSimplicialAb, y: TruncSimplicialAb) -> TruncSimplicialAb:
    T = min(x.T, y.T)
    levels = [tensor_group(x.levels[n], y.levels[n]) for n in range(T + 1)]
    faces = [[]] + [[tensor_hom(x.face(n, i), y.face(n, i), levels[n], levels[n - 1])
                     for i in range(n + 1)] for n in range(1, T + 1)]
    degens = [[tensor_hom(x.degen(n, i), y.degen(n, i), levels[n], levels[n + 1])
               for i in range(n + 1)] for n in range(T)]
    return TruncSimplicialAb(levels, faces, degens)


def tensor_complex(c1: ChainComplexAb, c2: ChainComplexAb, top: int | None = None) -> ChainComplexAb:
    """Total complex with ``d(a (x) b) = da (x) b + (-1)^i a (x) db``."""
    top = c1.length + c2.length if top is None else top
    blocks = []  # per degree: list of (i, j, group, offset)
    groups = []
    for n in range(top + 1):
        parts, off = [], 0
        for i in range(n + 1):
            j = n - i
            if i > c1.length or j > c2.length:
                continue
            g = tensor_group(c1.group(i), c2.group(j))
            parts.append((i, j, g, off))
            off += g.ngens
        blocks.append(parts)
        groups.append(direct_sum(*(p[2] for p in parts)) if parts else FgAbGroup.trivial())
    diffs = [None]
    for n in range(1, top + 1):
        rows = [dict() for _ in range(groups[n - 1].ngens)]
        where = {(i, j): off for i, j, _, off in blocks[n - 1]}
        for i, j, g, off in blocks[n]:
            if i >= 1 and (i - 1, j) in where:
                m = IntMatrix.kron(c1.diff(i).matrix, IntMatrix.identity(c2.group(j).ngens))
                _add_block(rows, m, where[(i - 1, j)], off, 1)
            if j >= 1 and (i, j - 1) in where:
                m = IntMatrix.kron(IntMatrix.identity(c1.group(i).ngens), c2.diff(j).matrix)
                _add_block(rows, m, where[(i, j - 1)], off, -1 if i % 2 else 1)
        mat = IntMatrix(groups[n - 1].ngens, groups[n].ngens, rows)
        diffs.append(AbHom(groups[n], groups[n - 1], mat, check=False))
    return ChainComplexAb(groups, diffs)


def _add_block(rows, m: IntMatrix, r0: int, c0: int, sign: int) -> None:
    for r in range(m.nrows):
        tgt = rows[r0 + r]
        for c, v in m.row_dict(r).items():
            val = tgt.get(c0 + c, 0) + sign * v
            if val:
                tgt[c0 + c] = val
            else:
                tgt.pop(c0 + c, None)


def homology(c: ChainComplexAb, n: int) -> FgAbGroup:
    return chain_homology(c, n).group.canonical_group()


def kunneth_formula(h1: list, h2: list, n: int) -> FgAbGroup:
    """``sum_{i+j=n} H_i (x) H_j  +  sum_{i+j=n-1} Tor(H_i, H_j)`` from homology lists."""
    parts = []
    for i in range(n + 1):
        j = n - i
        if i < len(h1) and j < len(h2):
            parts.append(tensor(h1[i], h2[j]))
    for i in range(n):
        j = n - 1 - i
        if i < len(h1) and j < len(h2):
            parts.append(tor(h1[i], h2[j]))
    return direct_sum(*parts).canonical_group() if parts else FgAbGroup.trivial()


def kunneth_homology(c1: ChainComplexAb, c2: ChainComplexAb, n: int) -> FgAbGroup:
    """Kunneth value of ``H_n(c1 (x) c2)``; both complexes must be levelwise free."""
    if not (c1.is_free() and c2.is_free()):
        raise NotFree("Kunneth formula needs levelwise free complexes")
    h1 = [homology(c1, i) for i in range(min(n, c1.length) + 1)]
    h2 = [homology(c2, j) for j in range(min(n, c2.length) + 1)]
    return kunneth_formula(h1, h2, n)


@dataclass(frozen=True)
class KunnethReport:
    degree: int
    diagonal: FgAbGroup       # H_n(N(x (x) y))
    tensor_of_moore: FgAbGroup  # H_n(N x (x) N y)
    formula: FgAbGroup        # Kunneth expansion from pi_*(x), pi_*(y)
    free: bool

    @property
    def agree(self) -> bool:
        ok = is_isomorphic(self.diagonal, self.tensor_of_moore)
        return ok and (not self.free or is_isomorphic(self.diagonal, self.formula))

    def to_json(self) -> dict:
        return {"degree": self.degree, "diagonal": self.diagonal.to_json(),
                "tensor_of_moore": self.tensor_of_moore.to_json(),
                "formula": self.formula.to_json(), "free": self.free, "agree": self.agree}


def kunneth_check(x: TruncSimplicialAb, y: TruncSimplicialAb, n: int, check: bool = True) -> KunnethReport:
    T = min(x.T, y.T)
    if n < 0 or n > T - 2:
        raise DegreeOutOfRange(f"degree {n} exceeds truncation bound {T - 2}")
    if check:
        _require_identities(x)
        _require_identities(y)
    xt, yt = x.truncate(n + 1), y.truncate(n + 1)
    diag = moore_data(tensor_diagonal(xt, yt), check=False).complex
    mx = moore_data(xt, check=False).complex
    my = moore_data(yt, check=False).complex
    tm = tensor_complex(mx, my, top=n + 1)
    h1 = [homology(mx, i) for i in range(n + 1)]
    h2 = [homology(my, j) for j in range(n + 1)]
    free = mx.is_free() and my.is_free()
    return KunnethReport(n, homology(diag, n), homology(tm, n), kunneth_formula(h1, h2, n), free)
