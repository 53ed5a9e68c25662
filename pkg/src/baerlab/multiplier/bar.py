"""Bar models of finite groups, the quotient square of a triple and its double kernel.

These are the literal, unnormalized simplicial objects.  The pipeline
computations in ``pipeline`` use the normalized complexes of ``complexes``,
which are chain homotopy equivalent and much smaller.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..abelian import AbHom, FgAbGroup, IntMatrix, elementary_divisors
from ..errors import DegreeOutOfRange, SizeCapExceeded
from ..groups.finite import FiniteGroup
from ..groups.triples import TripleInstance
from ..simplicial.les import LevelwiseSurjection
from ..simplicial.objects import TruncSimplicialAb
from .complexes import _Level, _tuples, bar_boundary

DEFAULT_T = 4
DEFAULT_CAP = 4096


def check_cap(order: int, T: int, cap: int) -> None:
    if order ** T > cap:
        raise SizeCapExceeded(f"|G|^T = {order}^{T} exceeds the cap {cap}")


def _face_tuple(g: FiniteGroup, t: tuple, i: int) -> tuple:
    n = len(t)
    if i == 0:
        return t[1:]
    if i == n:
        return t[:-1]
    return t[: i - 1] + (g.mul(t[i - 1], t[i]),) + t[i + 1:]


def _degen_tuple(g: FiniteGroup, t: tuple, i: int) -> tuple:
    return t[:i] + (g.identity,) + t[i:]


def _tuple_map(src_tuples, dst_index, fn, nrows: int) -> IntMatrix:
    return IntMatrix.from_sparse_columns([{dst_index[fn(t)]: 1} for t in src_tuples], nrows)


@dataclass(eq=False)
class BarModel(TruncSimplicialAb):
    """Free abelian group on ``G^n`` at level ``n`` with the bar faces and degeneracies."""

    g: FiniteGroup = field(default=None)

    @classmethod
    def build(cls, g: FiniteGroup, T: int) -> "BarModel":
        tl = [_tuples(g, n, False) for n in range(T + 1)]
        levels = [FgAbGroup.free(len(t[0])) for t in tl]
        faces: list = [[]]
        for n in range(1, T + 1):
            faces.append([AbHom(levels[n], levels[n - 1],
                                _tuple_map(tl[n][0], tl[n - 1][1], lambda t, i=i: _face_tuple(g, t, i),
                                           levels[n - 1].ngens), check=False)
                          for i in range(n + 1)])
        degens = [[AbHom(levels[n], levels[n + 1],
                         _tuple_map(tl[n][0], tl[n + 1][1], lambda t, i=i: _degen_tuple(g, t, i),
                                    levels[n + 1].ngens), check=False)
                   for i in range(n + 1)] for n in range(T)]
        return cls(levels, faces, degens, g)

    def tuples(self, n: int) -> list:
        return _tuples(self.g, n, False)[0]


def bar_model(g: FiniteGroup, T: int = DEFAULT_T, cap: int = DEFAULT_CAP) -> BarModel:
    check_cap(g.order, T, cap)
    return BarModel.build(g, T)


def bar_level_maps(src: BarModel, dst: BarModel, fmap: Sequence[int]) -> list:
    """Levelwise maps induced by a group homomorphism given as an element map."""
    out = []
    for n in range(min(src.T, dst.T) + 1):
        idx = _tuples(dst.g, n, False)[1]
        mat = _tuple_map(src.tuples(n), idx, lambda t: tuple(fmap[x] for x in t), dst.levels[n].ngens)
        out.append(AbHom(src.levels[n], dst.levels[n], mat, check=False))
    return out


def _normalized_boundary(g: FiniteGroup, n: int) -> IntMatrix:
    src = _tuples(g, n)[0]
    idx = _tuples(g, n - 1)[1]
    cols = [{idx[r]: v for r, v in bar_boundary(g, t).items()} for t in src]
    return IntMatrix.from_sparse_columns(cols, len(idx))


def homology_group(g: FiniteGroup, n: int, cap: int = DEFAULT_CAP) -> FgAbGroup:
    """``H_n(G; Z)`` from the normalized bar complex, using truncation ``T = n + 1``.

    Only elementary divisors are needed: ``H_n`` is free of rank
    ``dim C_n - rk d_n - rk d_{n+1}`` plus the torsion of ``d_{n+1}``.
    """
    if n < 0:
        raise DegreeOutOfRange("homology degree must be non-negative")
    check_cap(g.order, n + 1, cap)
    if n == 0:
        return FgAbGroup.free(1)
    dim = len(_tuples(g, n)[0])
    rk_in = len(elementary_divisors(_normalized_boundary(g, n)))
    divs = elementary_divisors(_normalized_boundary(g, n + 1))
    return FgAbGroup.from_invariants([d for d in divs if d > 1], dim - rk_in - len(divs))


@dataclass(eq=False)
class QuotientSquare:
    """Bar models of ``G, G/N, G/M, G/MN`` with the four projections.

    ``alpha: G -> G/N``, ``beta: G -> G/M``, ``gamma: G/M -> G/MN``,
    ``delta: G/N -> G/MN``; element maps are kept in ``maps``.
    """

    triple: TripleInstance
    T: int
    bars: dict
    maps: dict
    alpha: LevelwiseSurjection
    beta: LevelwiseSurjection
    gamma: LevelwiseSurjection
    delta: LevelwiseSurjection

    def commutes(self) -> bool:
        m = self.maps
        if any(m["gamma"][b] != m["delta"][a] for a, b in zip(m["alpha"], m["beta"])):
            return False
        for n in range(self.T + 1):
            lhs = self.gamma.maps[n] @ self.beta.maps[n]
            rhs = self.delta.maps[n] @ self.alpha.maps[n]
            if not lhs.equals(rhs):
                return False
        return True


def square_element_maps(t: TripleInstance) -> dict:
    mn = t.mod_mn.projection
    return {
        "alpha": t.mod_n.projection,
        "beta": t.mod_m.projection,
        "gamma": tuple(mn[x] for x in t.mod_m.lifts),
        "delta": tuple(mn[x] for x in t.mod_n.lifts),
    }


def quotient_square(t: TripleInstance, T: int = DEFAULT_T, cap: int = DEFAULT_CAP) -> QuotientSquare:
    check_cap(t.g.order, T, cap)
    bars = {"G": BarModel.build(t.g, T), "G/N": BarModel.build(t.mod_n.group, T),
            "G/M": BarModel.build(t.mod_m.group, T), "G/MN": BarModel.build(t.mod_mn.group, T)}
    maps = square_element_maps(t)

    def surj(a, b, key):
        return LevelwiseSurjection(bars[a], bars[b], bar_level_maps(bars[a], bars[b], maps[key]))

    return QuotientSquare(t, T, bars, maps, surj("G", "G/N", "alpha"), surj("G", "G/M", "beta"),
                          surj("G/M", "G/MN", "gamma"), surj("G/N", "G/MN", "delta"))


@dataclass(eq=False)
class KernelModel:
    """Levelwise kernel of up to two projections of a bar model, as a simplicial object.

    Level ``n`` is free on the fundamental cycles of the tuple graph; faces
    and degeneracies are computed on cycles and read back in cycle
    coordinates, which also certifies that the kernel is a subobject.
    """

    g: FiniteGroup
    sides: list
    levels: list
    model: TruncSimplicialAb

    @classmethod
    def build(cls, g: FiniteGroup, sides: Sequence[tuple], T: int) -> "KernelModel":
        sides = [(tuple(p), i) for p, i in sides]
        lv = [_Level(g, n, sides, normalized=False) for n in range(T + 1)]
        groups = [FgAbGroup.free(x.rank) for x in lv]

        def hom(n_src, n_dst, fn):
            cols = []
            for cyc in lv[n_src].cycles:
                img: dict = {}
                for t, c in cyc.items():
                    r = fn(t)
                    img[r] = img.get(r, 0) + c
                cols.append(lv[n_dst].coords({k: v for k, v in img.items() if v}, True,
                                             f"at level {n_dst}"))
            return AbHom(groups[n_src], groups[n_dst],
                         IntMatrix.from_columns(cols, groups[n_dst].ngens), check=False)

        faces = [[]] + [[hom(n, n - 1, lambda t, i=i: _face_tuple(g, t, i)) for i in range(n + 1)]
                        for n in range(1, T + 1)]
        degens = [[hom(n, n + 1, lambda t, i=i: _degen_tuple(g, t, i)) for i in range(n + 1)]
                  for n in range(T)]
        return cls(g, sides, lv, TruncSimplicialAb(groups, faces, degens))

    def map_to(self, other: "KernelModel", fmap: Sequence[int]) -> list:
        """Levelwise maps induced by ``fmap: self.g -> other.g``."""
        out = []
        for n, lv in enumerate(self.levels[: len(other.levels)]):
            cols = []
            for cyc in lv.cycles:
                img: dict = {}
                for t, c in cyc.items():
                    r = tuple(fmap[x] for x in t)
                    img[r] = img.get(r, 0) + c
                cols.append(other.levels[n].coords({k: v for k, v in img.items() if v}))
            out.append(AbHom(self.model.levels[n], other.model.levels[n],
                             IntMatrix.from_columns(cols, other.levels[n].rank), check=False))
        return out


def double_kernel(sq: QuotientSquare) -> TruncSimplicialAb:
    """Levelwise ``ker(alpha) cap ker(beta)``, the kernel of ``ker beta -> ker delta``."""
    return double_kernel_model(sq).model


def double_kernel_model(sq: QuotientSquare) -> KernelModel:
    t = sq.triple
    m = sq.maps
    return KernelModel.build(t.g, [(m["alpha"], t.mod_n.group.identity),
                                   (m["beta"], t.mod_m.group.identity)], sq.T)


def vertical_models(sq: QuotientSquare) -> dict:
    """``ker beta`` on ``G`` and ``ker delta`` on ``G/N`` with the map between them."""
    t = sq.triple
    m = sq.maps
    kb = KernelModel.build(t.g, [(m["beta"], t.mod_m.group.identity)], sq.T)
    kd = KernelModel.build(t.mod_n.group, [(m["delta"], t.mod_mn.group.identity)], sq.T)
    return {"ker_beta": kb, "ker_delta": kd, "map": kb.map_to(kd, m["alpha"])}
