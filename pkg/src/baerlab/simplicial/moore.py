"""Moore complex by literal kernel intersection, homotopy groups, Dold-Kan."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..abelian import AbHom, FgAbGroup, IntMatrix, direct_sum
from ..errors import DegreeOutOfRange, IdentityViolation
from .objects import (ChainComplexAb, HomologyData, TruncSimplicialAb, _Expresser,
                      chain_homology, check_simplicial_identities)


@dataclass(eq=False)
class MooreComplex:
    """``N_n = cap_{i<n} ker d_i`` with ``incl[n]`` its generators in ``X_n`` coordinates."""

    source: TruncSimplicialAb
    complex: ChainComplexAb
    incl: list  # IntMatrix per level
    expressers: list

    def express(self, n: int, y) -> list[int]:
        return self.expressers[n](y)


def _moore(x: TruncSimplicialAb, top: int | None = None) -> MooreComplex:
    top = x.T if top is None else top
    groups, incls, exprs, diffs = [], [], [], [None]
    for n in range(top + 1):
        xn = x.levels[n]
        if n == 0:
            grp, inc = xn, IntMatrix.identity(xn.ngens)
        else:
            stacked = x.face(n, 0).matrix
            for i in range(1, n):
                stacked = stacked.vstack(x.face(n, i).matrix)
            tgt = direct_sum(*([x.levels[n - 1]] * n))
            parts = AbHom(xn, tgt, stacked, check=False).parts
            grp, inc = parts.kernel, parts.kernel_incl.matrix
        groups.append(grp)
        incls.append(inc)
        exprs.append(_Expresser(inc, xn))
        if n >= 1:
            imgs = x.face(n, n).matrix @ inc
            diffs.append(AbHom(grp, groups[n - 1], exprs[n - 1].matrix(imgs)))
    return MooreComplex(x, ChainComplexAb(groups, diffs), incls, exprs)


def _require_identities(x) -> None:
    rep = check_simplicial_identities(x)
    if not rep.ok:
        raise IdentityViolation(f"simplicial identities fail: {list(rep.violations)[:5]}")


def moore_data(x: TruncSimplicialAb, check: bool = True, top: int | None = None) -> MooreComplex:
    if check:
        _require_identities(x)
    return _moore(x, top)


def moore_complex(x: TruncSimplicialAb, check: bool = True) -> ChainComplexAb:
    return moore_data(x, check).complex


def homotopy_data(x: TruncSimplicialAb, n: int, check: bool = True) -> tuple[MooreComplex, HomologyData]:
    if n < 0 or n > x.T - 1:
        raise DegreeOutOfRange(f"degree {n} needs level {n + 1}, truncation is {x.T}")
    md = moore_data(x, check, top=n + 1)
    return md, chain_homology(md.complex, n)


def homotopy(x: TruncSimplicialAb, n: int, check: bool = True) -> FgAbGroup:
    """``pi_n(X) = H_n(N X)``; needs ``n <= T - 1``."""
    return homotopy_data(x, n, check)[1].group.canonical_group()


# Dold-Kan: Gamma_n = sum over surjections [n] -> [k] of C_k.

def _surjections(n: int) -> list[tuple[int, ...]]:
    """Monotone surjections ``[n] -> [k]`` as value tuples, ordered by ``k`` then lexicographically."""
    out = []
    for k in range(n + 1):
        # choose the k positions 1..n where the value steps up
        for steps in combinations(range(1, n + 1), k):
            vals, v, si = [], 0, set(steps)
            for p in range(n + 1):
                if p in si:
                    v += 1
                vals.append(v)
            out.append(tuple(vals))
    return out


def _face_map(n: int, i: int) -> tuple[int, ...]:
    """Coface ``[n-1] -> [n]`` skipping ``i``."""
    return tuple(x if x < i else x + 1 for x in range(n))


def _degen_map(n: int, i: int) -> tuple[int, ...]:
    """Codegeneracy ``[n+1] -> [n]`` hitting ``i`` twice."""
    return tuple(x if x <= i else x - 1 for x in range(n + 2))


def dold_kan(c: ChainComplexAb, T: int) -> TruncSimplicialAb:
    """Simplicial abelian group whose Moore complex is ``c`` in degrees ``< T``.

    Degrees of ``c`` above ``T`` are ignored.  Faces and degeneracies are the
    structure maps of ``Gamma(c)`` induced by monotone maps ``theta``: for a
    summand indexed by ``sigma``, factor ``sigma theta = mu tau``; the summand
    goes identically to ``tau`` when ``mu`` is the identity, through the
    differential when ``mu`` is the last coface, and to zero otherwise.
    """
    if T < 0:
        raise ValueError("truncation must be non-negative")
    surj = [_surjections(n) for n in range(T + 1)]
    levels, offsets = [], []
    for n in range(T + 1):
        offs, total, parts = [], 0, []
        for s in surj[n]:
            k = s[-1]
            offs.append(total)
            total += c.group(k).ngens
            parts.append(c.group(k))
        offsets.append(offs)
        levels.append(direct_sum(*parts) if parts else FgAbGroup.trivial())

    def induced(n_src: int, n_dst: int, theta: tuple[int, ...]) -> AbHom:
        # theta: [n_dst] -> [n_src], induces X_{n_src} -> X_{n_dst}
        index_dst = {s: idx for idx, s in enumerate(surj[n_dst])}
        rows: list[dict] = [dict() for _ in range(levels[n_dst].ngens)]
        for idx, s in enumerate(surj[n_src]):
            k = s[-1]
            comp = tuple(s[t] for t in theta)
            img = sorted(set(comp))
            relabel = {v: r for r, v in enumerate(img)}
            tau = tuple(relabel[v] for v in comp)
            base = offsets[n_src][idx]
            if img == list(range(k + 1)):
                block = IntMatrix.identity(c.group(k).ngens)
            elif img == list(range(k)):
                block = c.diff(k).matrix
            else:
                continue
            tbase = offsets[n_dst][index_dst[tau]]
            for r in range(block.nrows):
                for col, v in block.row_dict(r).items():
                    rows[tbase + r][base + col] = rows[tbase + r].get(base + col, 0) + v
        mat = IntMatrix(levels[n_dst].ngens, levels[n_src].ngens, rows)
        return AbHom(levels[n_src], levels[n_dst], mat, check=False)

    faces = [[]] + [[induced(n, n - 1, _face_map(n, i)) for i in range(n + 1)] for n in range(1, T + 1)]
    degens = [[induced(n, n + 1, _degen_map(n, i)) for i in range(n + 1)] for n in range(T)]
    return TruncSimplicialAb(levels, faces, degens)


def dold_kan_map(c: ChainComplexAb, d: ChainComplexAb, phi: list, T: int,
                 x: TruncSimplicialAb | None = None, y: TruncSimplicialAb | None = None) -> list:
    """Levelwise maps ``dold_kan(c) -> dold_kan(d)`` induced by a chain map ``phi``."""
    x = x or dold_kan(c, T)
    y = y or dold_kan(d, T)
    out = []
    for n in range(T + 1):
        blocks = [phi[s[-1]].matrix if s[-1] < len(phi)
                  else IntMatrix.zeros(d.group(s[-1]).ngens, c.group(s[-1]).ngens)
                  for s in _surjections(n)]
        mat = IntMatrix.block_diag(*blocks) if blocks else IntMatrix.zeros(0, 0)
        out.append(AbHom(x.levels[n], y.levels[n], mat, check=False))
    return out


def simplicial_direct_sum(x: TruncSimplicialAb, y: TruncSimplicialAb) -> TruncSimplicialAb:
    T = min(x.T, y.T)
    levels = [direct_sum(x.levels[n], y.levels[n]) for n in range(T + 1)]

    def bd(f, g, a, b):
        return AbHom(levels[a], levels[b], IntMatrix.block_diag(f.matrix, g.matrix), check=False)

    faces = [[]] + [[bd(x.face(n, i), y.face(n, i), n, n - 1) for i in range(n + 1)]
                    for n in range(1, T + 1)]
    degens = [[bd(x.degen(n, i), y.degen(n, i), n, n + 1) for i in range(n + 1)] for n in range(T)]
    return TruncSimplicialAb(levels, faces, degens)


def second_projection(x: TruncSimplicialAb, y: TruncSimplicialAb, s: TruncSimplicialAb) -> list:
    """Levelwise projections ``x (+) y -> y`` for ``s = simplicial_direct_sum(x, y)``."""
    out = []
    for n in range(s.T + 1):
        a, b = x.levels[n].ngens, y.levels[n].ngens
        mat = IntMatrix.zeros(b, a).hstack(IntMatrix.identity(b))
        out.append(AbHom(s.levels[n], y.levels[n], mat, check=False))
    return out
