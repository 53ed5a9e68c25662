"""Long exact homotopy sequence of a levelwise surjection."""

from __future__ import annotations

from dataclasses import dataclass

from ..abelian import AbHom, FgAbGroup, IntMatrix, smith
from ..abelian.smith import solve_with
from ..errors import DegreeOutOfRange, IllDefinedHom, NotSurjective
from ..exactseq import ExactnessReport, ExactSeqInstance, verify_exactness
from .moore import MooreComplex, moore_data, _require_identities
from .objects import (ChainComplexAb, TruncSimplicialAb, _Expresser, chain_homology,
                      induced_on_homology)


@dataclass(eq=False)
class LevelwiseSurjection:
    source: TruncSimplicialAb
    target: TruncSimplicialAb
    maps: list  # AbHom per level

    def __post_init__(self):
        if self.source.T != self.target.T or len(self.maps) != self.source.T + 1:
            raise ValueError("levelwise map needs one hom per level of equal truncations")

    @property
    def T(self) -> int:
        return self.source.T

    def check(self) -> None:
        x, y, f = self.source, self.target, self.maps
        for n, fn in enumerate(f):
            if not fn.is_surjective():
                raise NotSurjective(f"level {n} map is not surjective")
        for n in range(1, self.T + 1):
            for i in range(n + 1):
                if not (f[n - 1] @ x.face(n, i)).equals(y.face(n, i) @ f[n]):
                    raise IllDefinedHom(f"map does not commute with face d_{i} at level {n}")
        for n in range(self.T):
            for i in range(n + 1):
                if not (f[n + 1] @ x.degen(n, i)).equals(y.degen(n, i) @ f[n]):
                    raise IllDefinedHom(f"map does not commute with degeneracy s_{i} at level {n}")


def kernel_object(f: LevelwiseSurjection) -> tuple[TruncSimplicialAb, list]:
    """Levelwise kernel with its inclusion matrices into the source."""
    x = f.source
    levels, incl, exprs = [], [], []
    for n, fn in enumerate(f.maps):
        parts = fn.parts
        levels.append(parts.kernel)
        incl.append(parts.kernel_incl.matrix)
        exprs.append(_Expresser(incl[-1], x.levels[n]))

    def restrict(hom: AbHom, n_src: int, n_dst: int) -> AbHom:
        imgs = hom.matrix @ incl[n_src]
        return AbHom(levels[n_src], levels[n_dst], exprs[n_dst].matrix(imgs), check=False)

    faces = [[]] + [[restrict(x.face(n, i), n, n - 1) for i in range(n + 1)] for n in range(1, x.T + 1)]
    degens = [[restrict(x.degen(n, i), n, n + 1) for i in range(n + 1)] for n in range(x.T)]
    return TruncSimplicialAb(levels, faces, degens), incl


def _moore_map(src: MooreComplex, dst: MooreComplex, level_map: IntMatrix, n: int) -> IntMatrix:
    """Matrix of a levelwise map restricted to Moore level ``n``, in Moore generators."""
    return dst.expressers[n].matrix(level_map @ src.incl[n])


@dataclass(eq=False)
class LesResult:
    sequence: ExactSeqInstance
    report: ExactnessReport
    kernel: TruncSimplicialAb
    top_degree: int
    indeterminate_degree: int

    def to_json(self) -> dict:
        return {
            "terms": [{"label": lab, "group": t.to_json()}
                      for lab, t in zip(self.sequence.labels, self.sequence.terms)],
            "exactness": self.report.to_json(),
            "exact": self.report.exact,
            "top_degree": self.top_degree,
            "indeterminate_degree": self.indeterminate_degree,
        }


@dataclass(eq=False)
class ChainLes:
    """Homology data and maps of ``0 -> K -> X -> Y -> 0`` up to a top degree."""

    terms: list
    maps: list
    labels: list
    hk: list
    hx: list
    hy: list
    inc: list  # AbHom pi_n(K) -> pi_n(X)
    proj: list  # AbHom pi_n(X) -> pi_n(Y)
    connecting: dict  # n -> AbHom pi_n(Y) -> pi_{n-1}(K)

    def sequence(self) -> ExactSeqInstance:
        return ExactSeqInstance(list(self.terms), list(self.maps), list(self.labels))


def chain_les(ck: ChainComplexAb, cx: ChainComplexAb, cy: ChainComplexAb, inc_maps: list,
              f_maps: list, top: int, names=("K", "X", "Y")) -> ChainLes:
    """Long exact homology sequence of a levelwise short exact sequence of complexes.

    ``inc_maps[n]`` and ``f_maps[n]`` are the chain maps at degree ``n``
    (needed up to ``top + 1``).  Connecting maps lift a cycle of Y to X,
    apply the differential of X and read the result back in K.
    """
    hk = [chain_homology(ck, n) for n in range(top + 1)]
    hx = [chain_homology(cx, n) for n in range(top + 1)]
    hy = [chain_homology(cy, n) for n in range(top + 1)]
    inc = [induced_on_homology(hk[n], hx[n], inc_maps[n]) for n in range(top + 1)]
    proj = [induced_on_homology(hx[n], hy[n], f_maps[n]) for n in range(top + 1)]
    conn = {n: _connecting(n, hy[n], hk[n - 1], cx, cy, f_maps[n], inc_maps[n - 1])
            for n in range(1, top + 1)}
    terms, maps, labels = [], [], []
    a, b, c = names
    for n in range(top, -1, -1):
        terms += [hk[n].group, hx[n].group, hy[n].group]
        labels += [f"pi_{n}({a})", f"pi_{n}({b})", f"pi_{n}({c})"]
        maps += [inc[n], proj[n]]
        if n >= 1:
            maps.append(conn[n])
    zero = FgAbGroup.trivial()
    maps.append(AbHom.zero(terms[-1], zero))
    terms.append(zero)
    labels.append("0")
    return ChainLes(terms, maps, labels, hk, hx, hy, inc, proj, conn)


def les_of_surjection(f: LevelwiseSurjection, check: bool = True) -> LesResult:
    """``pi_n(K) -> pi_n(X) -> pi_n(Y) -> pi_{n-1}(K) -> ... -> pi_0(Y) -> 0`` for ``n <= T - 2``.

    Connecting maps are computed at chain level on Moore complexes.  The
    lift is the particular solution produced by the Smith decomposition of
    the lifting system, which is deterministic.
    """
    T = f.T
    if T < 2:
        raise DegreeOutOfRange("the long exact sequence needs truncation at least 2")
    if check:
        _require_identities(f.source)
        _require_identities(f.target)
        f.check()
    top = T - 2
    k, kincl = kernel_object(f)
    mk = moore_data(k, check=False, top=top + 1)
    mx = moore_data(f.source, check=False, top=top + 1)
    my = moore_data(f.target, check=False, top=top + 1)
    inc_maps = [_moore_map(mk, mx, kincl[n], n) for n in range(top + 2)]
    f_maps = [_moore_map(mx, my, f.maps[n].matrix, n) for n in range(top + 2)]
    les = chain_les(mk.complex, mx.complex, my.complex, inc_maps, f_maps, top)
    seq = les.sequence()
    return LesResult(seq, verify_exactness(seq), k, top, T - 1)


def _connecting(n, hy_n, hk_prev, cx, cy, f_mat, inc_mat) -> AbHom:
    ny = cy.group(n)
    lift = smith(f_mat.hstack(ny.presentation))
    nx_prev = cx.group(n - 1)
    back = smith(inc_mat.hstack(nx_prev.presentation))
    dx = cx.diff(n).matrix
    cols = []
    for z in hy_n.cycles.columns():
        sol = solve_with(lift, z)
        if sol is None:
            raise NotSurjective(f"degree {n} chain map is not surjective")
        x = sol[: f_mat.ncols]
        bx = dx.apply(x)
        sol = solve_with(back, bx)
        if sol is None:
            raise IllDefinedHom("boundary of a lift does not come from the kernel")
        w = sol[: inc_mat.ncols]
        cols.append(hk_prev.express_cycle(w))
    return AbHom(hy_n.group, hk_prev.group, IntMatrix.from_columns(cols, hk_prev.group.ngens))
