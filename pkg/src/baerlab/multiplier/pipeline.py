"""Multipliers of pairs and triples from normalized bar complexes, and their exact sequences.

Bar-model homotopy is unshifted group homology, so the multiplier of a
triple, defined as ``pi_1`` of the double kernel of a free simplicial
resolution, appears here as ``pi_2`` of the double kernel of bar models.
Likewise ``pi_0`` of a resolution kernel appears as ``pi_1`` of a bar
kernel, and is identified with the corresponding group-theoretic quotient
by an explicit isomorphism that is verified on every call.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Optional

from ..abelian import AbHom, FgAbGroup, IntMatrix
from ..errors import Inconsistent, IllDefinedHom, MethodMismatch, NotIsomorphism, SizeCapExceeded
from ..exactseq import (ExactnessReport, ExactSeqInstance, TermConstraint, Unknown,
                        solve_unknowns, verify_exactness)
from ..groups.finite import FiniteGroup, Subgroup, commutator_subgroup, product
from ..groups.subquotient import AbelianSubquotient
from ..groups.triples import TripleInstance, TripleMorphism
from ..groups.varieties import VarietySpec, lue_product, sharp_q, verbal_subgroup
from ..simplicial.les import ChainLes, chain_les
from ..simplicial.objects import chain_homology, induced_on_homology
from .bar import DEFAULT_CAP, check_cap, homology_group, square_element_maps
from .complexes import KernelComplex

TOP = 3  # complexes through degree 3 give pi_0 .. pi_2 and the connecting maps between them
METHODS = ("bar-model", "theorem-3.6", "theorem-3.8", "les-forced", "witt-formula")


@dataclass(eq=False)
class MultiplierResult:
    """A multiplier value, or the bounds an exact sequence places on it.

    ``lower`` is the subgroup the value is known to contain and ``upper``
    the quotient it is known to map onto; when ``value`` is present both
    equal it.  ``candidates`` lists the abelian extensions still possible.
    """

    value: Optional[FgAbGroup]
    method: str
    degree_shift: bool
    lower: Optional[FgAbGroup] = None
    upper: Optional[FgAbGroup] = None
    candidates: tuple = ()
    model: str = "bar"
    forced: bool = False
    constraint: Optional[TermConstraint] = None
    factors: tuple = ()
    notes: tuple = ()

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if self.value is not None:
            self.value = self.value.canonical_group()
            self.lower = self.upper = self.value

    def to_json(self) -> dict:
        out = {
            "value": self.value.to_json() if self.value is not None else None,
            "method": self.method,
            "model": self.model,
            "degree_shift": self.degree_shift,
            "forced": self.forced,
        }
        if self.value is None:
            out["lower"] = self.lower.canonical_group().to_json() if self.lower is not None else None
            out["upper"] = self.upper.canonical_group().to_json() if self.upper is not None else None
            out["candidates"] = [c.to_json() for c in self.candidates]
        if self.constraint is not None:
            out["constraint"] = self.constraint.to_json()
        if self.factors:
            out["factors"] = [f.to_json() for f in self.factors]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


# -- cached square data ----------------------------------------------------

class SquareData:
    """Normalized bar complexes and kernel complexes of a triple's quotient square."""

    def __init__(self, t: TripleInstance, top: int = TOP, cap: int = DEFAULT_CAP):
        check_cap(t.g.order, top, cap)
        self.t = t
        self.top = top
        self.maps = square_element_maps(t)
        self._hom: dict = {}
        self._les_cache: dict = {}

    def _kc(self, g, sides, label):
        return KernelComplex(g, sides, self.top, label)

    @cached_property
    def ker_alpha(self) -> KernelComplex:
        return self._kc(self.t.g, [(self.maps["alpha"], self.t.mod_n.group.identity)], "ker alpha")

    @cached_property
    def ker_beta(self) -> KernelComplex:
        return self._kc(self.t.g, [(self.maps["beta"], self.t.mod_m.group.identity)], "ker beta")

    @cached_property
    def double(self) -> KernelComplex:
        t = self.t
        return self._kc(t.g, [(self.maps["alpha"], t.mod_n.group.identity),
                              (self.maps["beta"], t.mod_m.group.identity)], "double kernel")

    @cached_property
    def ker_gamma(self) -> KernelComplex:
        return self._kc(self.t.mod_m.group, [(self.maps["gamma"], self.t.mod_mn.group.identity)],
                        "ker gamma")

    @cached_property
    def ker_delta(self) -> KernelComplex:
        return self._kc(self.t.mod_n.group, [(self.maps["delta"], self.t.mod_mn.group.identity)],
                        "ker delta")

    @cached_property
    def bar_g(self) -> KernelComplex:
        return self._kc(self.t.g, [], "bar G")

    @cached_property
    def bar_gn(self) -> KernelComplex:
        return self._kc(self.t.mod_n.group, [], "bar G/N")

    @cached_property
    def bar_gm(self) -> KernelComplex:
        return self._kc(self.t.mod_m.group, [], "bar G/M")

    def homology(self, name: str, n: int):
        key = (name, n)
        if key not in self._hom:
            self._hom[key] = chain_homology(getattr(self, name).complex, n)
        return self._hom[key]

    def _les(self, key, k, x, y, fk, fx) -> ChainLes:
        if key not in self._les_cache:
            inc = [k.map_to(x, fk, n) for n in range(self.top + 1)]
            proj = [x.map_to(y, fx, n) for n in range(self.top + 1)]
            self._les_cache[key] = chain_les(k.complex, x.complex, y.complex, inc, proj, self.top - 1,
                                       names=key[1:])
        return self._les_cache[key]

    def les(self, which: str) -> ChainLes:
        """``alpha``: D -> ker alpha -> ker gamma; ``beta``: D -> ker beta -> ker delta;
        ``pair``: ker alpha -> bar G -> bar G/N."""
        ident = tuple(range(self.t.g.order))
        if which == "alpha":
            return self._les(("alpha", "D", "ker alpha", "ker gamma"), self.double, self.ker_alpha,
                             self.ker_gamma, ident, self.maps["beta"])
        if which == "beta":
            return self._les(("beta", "D", "ker beta", "ker delta"), self.double, self.ker_beta,
                             self.ker_delta, ident, self.maps["alpha"])
        if which == "pair":
            return self._les(("pair", "ker alpha", "G", "G/N"), self.ker_alpha, self.bar_g,
                             self.bar_gn, ident, self.maps["alpha"])
        raise ValueError(f"unknown sequence {which!r}")


_CACHE: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def square_data(t: TripleInstance, top: int = TOP, cap: int = DEFAULT_CAP) -> SquareData:
    per = _CACHE.setdefault(t, {})
    if (top, cap) not in per:
        per[(top, cap)] = SquareData(t, top, cap)
    return per[(top, cap)]


_PAIRS: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def pair_triple(g: FiniteGroup, n: Subgroup) -> TripleInstance:
    """A cached ``(G, N, N)`` so repeated pair computations share square data."""
    per = _PAIRS.setdefault(g, {})
    if n.elements not in per:
        per[n.elements] = TripleInstance.pair(g, n)
    return per[n.elements]


# -- pi_1 identifications --------------------------------------------------

def pi1_map(kc: KernelComplex, hd, target: AbelianSubquotient, elem: Callable[[int], int]) -> AbHom:
    """Map ``H_1`` of a kernel complex to a subquotient, sending ``[x]`` to ``elem(x)``."""
    k = target.group.ngens
    cols = []
    for z in hd.cycles.columns():
        vec = [0] * k
        for (x,), c in kc.chain(1, z).items():
            for j, v in enumerate(target.vector(elem(x))):
                vec[j] += c * v
        cols.append(vec)
    return AbHom(hd.group, target.group, IntMatrix.from_columns(cols, k))


def _require_iso(f: AbHom, what: str) -> AbHom:
    if not f.is_isomorphism():
        raise NotIsomorphism(f"identification of {what} is not an isomorphism")
    return f


def _lift_correction(g: FiniteGroup, proj, lifts, ident_class) -> Callable[[int], int]:
    """``x -> x r(p(x))^-1`` for the coset lift ``r`` with ``r(identity) = e``."""
    def f(x):
        c = proj[x]
        r = g.identity if c == ident_class else lifts[c]
        return g.mul(x, g.inv(r))
    return f


def phi_alpha(sd: SquareData, target: AbelianSubquotient) -> AbHom:
    """``pi_1(ker alpha) -> N/[N,G]``."""
    t = sd.t
    f = _lift_correction(t.g, t.mod_n.projection, t.mod_n.lifts, t.mod_n.group.identity)
    return _require_iso(pi1_map(sd.ker_alpha, sd.homology("ker_alpha", 1), target, f), "pi_1(ker alpha)")


def phi_beta(sd: SquareData, target: AbelianSubquotient) -> AbHom:
    t = sd.t
    f = _lift_correction(t.g, t.mod_m.projection, t.mod_m.lifts, t.mod_m.group.identity)
    return _require_iso(pi1_map(sd.ker_beta, sd.homology("ker_beta", 1), target, f), "pi_1(ker beta)")


def _phi_quotient_kernel(sd: SquareData, which: str, target: AbelianSubquotient) -> AbHom:
    """``pi_1`` of ``ker(G/M -> G/MN)`` (or ``G/N``) into a subquotient of ``G``."""
    t, g = sd.t, sd.t.g
    q = t.mod_m if which == "gamma" else t.mod_n
    proj_mn, lifts_mn, ident = t.mod_mn.projection, t.mod_mn.lifts, t.mod_mn.group.identity

    def f(y):
        lam = q.lifts[y]
        c = proj_mn[lam]
        rho = g.identity if c == ident else lifts_mn[c]
        return g.mul(lam, g.inv(rho))

    kc = sd.ker_gamma if which == "gamma" else sd.ker_delta
    hd = sd.homology("ker_" + which, 1)
    return _require_iso(pi1_map(kc, hd, target, f), f"pi_1(ker {which})")


# -- group-level tail terms -------------------------------------------------

def _is_abelian_quotient(top: Subgroup, bottom: Subgroup) -> bool:
    g = top.parent
    return bottom.issubset(top) and bottom.is_normal(within=top) and all(
        g.commutator(x, y) in bottom for x in top.elements for y in top.elements)


def subquotient_term(top: Subgroup, bottom: Subgroup, label: str):
    """An ``AbelianSubquotient`` when ``top/bottom`` is abelian, else ``None``."""
    return AbelianSubquotient(top, bottom, label) if _is_abelian_quotient(top, bottom) else None


def group_exact(a: tuple, fa: Callable, b: tuple, fb: Callable, c: tuple) -> bool:
    """Exactness of subquotients ``a -> b -> c`` (pairs ``(top, bottom)``) under element maps."""
    gb = b[0].parent
    image = {gb.mul(fa(x), z) for x in a[0].elements for z in b[1].elements}
    kernel = {y for y in b[0].elements if fb(y) in c[1]}
    return image == kernel


def group_surjective(b: tuple, fb: Callable, c: tuple) -> bool:
    gc = c[0].parent
    return {gc.mul(fb(y), z) for y in b[0].elements for z in c[1].elements} == set(c[0].elements)


_LUE: "weakref.WeakKeyDictionary" = weakref.WeakKeyDictionary()


def cached_lue(g: FiniteGroup, n: Subgroup, v: VarietySpec) -> Subgroup:
    per = _LUE.setdefault(g, {})
    key = (n.elements, v)
    if key not in per:
        per[key] = lue_product(g, n, v)
    return per[key]


def cached_verbal(g: FiniteGroup, v: VarietySpec) -> Subgroup:
    per = _LUE.setdefault(g, {})
    key = ("verbal", v)
    if key not in per:
        per[key] = verbal_subgroup(g, v)
    return per[key]


# -- multiplier values --------------------------------------------------------

def _forcing(left, vm_label: str, mid_map: AbHom) -> TermConstraint:
    """Constraint on the multiplier slot in ``left -> VM -> A -f-> B``."""
    terms = [left, Unknown(vm_label), mid_map.source, mid_map.target]
    seq = ExactSeqInstance(terms, [None, None, mid_map], ["left", vm_label, "A", "B"], [1, 2])
    return solve_unknowns(seq)[vm_label]


def _result_from(value: FgAbGroup, con: TermConstraint, notes=()) -> MultiplierResult:
    if not con.admits(value):
        raise Inconsistent(f"bar-model value {value} violates the exact-sequence constraint")
    forced = con.forced is not None
    return MultiplierResult(value, "bar-model", True, forced=forced, constraint=con,
                            candidates=tuple(con.candidates or ()), notes=tuple(notes))


def triple_multiplier_bar(t: TripleInstance, cap: int = DEFAULT_CAP) -> MultiplierResult:
    """``pi_2`` of the double kernel of the bar-model quotient square (abelian variety)."""
    sd = square_data(t, cap=cap)
    value = sd.homology("double", 2).group.canonical_group()
    best = None
    for which, zero_side in (("alpha", t.mn.order == t.m.order), ("beta", t.mn.order == t.n.order)):
        les = sd.les(which)
        left = FgAbGroup.trivial() if zero_side else Unknown("pi_3")
        con = _forcing(left, "VM(G,M,N)", les.proj[2])
        if best is None or (con.forced is not None and best.forced is None):
            best = con
    return _result_from(value, best)


def relative_multiplier_bar(g: FiniteGroup, n: Subgroup, cap: int = DEFAULT_CAP) -> MultiplierResult:
    """``pi_2(ker(bar G -> bar G/N))``, the pair multiplier (abelian variety)."""
    t = pair_triple(g, n)
    sd = square_data(t, cap=cap)
    value = sd.homology("ker_alpha", 2).group.canonical_group()
    q = t.mod_n.group
    try:
        left = homology_group(q, 3, cap)
    except SizeCapExceeded:
        left = Unknown("H_3(G/N)")
    con = _forcing(left, "VM(G,N)", sd.les("pair").proj[2])
    return _result_from(value, con)


def schur_multiplier(g: FiniteGroup, cap: int = DEFAULT_CAP) -> FgAbGroup:
    return homology_group(g, 2, cap)


# -- exact sequences --------------------------------------------------------

@dataclass(eq=False)
class SequenceReport:
    sequence: ExactSeqInstance
    exactness: ExactnessReport
    group_checks: dict = field(default_factory=dict)
    notes: tuple = ()

    @property
    def exact(self) -> bool:
        return not self.exactness.inexact and all(self.group_checks.values())

    def to_json(self) -> dict:
        s = self.sequence
        terms = []
        for lab, term in zip(s.labels, s.terms):
            grp = None if isinstance(term, Unknown) else term.canonical_group().to_json()
            terms.append({"label": lab, "group": grp, "known": grp is not None})
        out = {"terms": terms, "exactness": self.exactness.to_json(),
               "inexact_slots": len(self.exactness.inexact),
               "undetermined_slots": len(self.exactness.undetermined)}
        if self.group_checks:
            out["group_checks"] = dict(sorted(self.group_checks.items()))
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _report(seq: ExactSeqInstance, group_checks=None, notes=()) -> SequenceReport:
    return SequenceReport(seq, verify_exactness(seq), dict(group_checks or {}), tuple(notes))


def _abelian_multiplier_slot(g: FiniteGroup, v: VarietySpec, label: str):
    """Absolute multiplier of ``g`` in a non-abelian variety, when a formula applies."""
    from .theorems import burns_ellis
    if v.tag == "nilpotent" and g.is_abelian:
        from ..groups.subquotient import abelian_structure
        return burns_ellis(abelian_structure(g).group.invariant_factors, v.param)
    return Unknown(label)


def les_pair(g: FiniteGroup, n: Subgroup, v: VarietySpec, cap: int = DEFAULT_CAP) -> SequenceReport:
    """``VM(G,N) -> VM(G) -> VM(G/N) -> N/[NV*G] -> G/V(G) -> (G/N)/V(G/N) -> 0``."""
    t = pair_triple(g, n)
    q = t.mod_n
    alpha = q.projection
    lue = cached_lue(g, n, v)
    specs = [(n, lue, "N/[NV*G]"), (g.whole(), cached_verbal(g, v), "G/V(G)"),
             (q.group.whole(), cached_verbal(q.group, v), "(G/N)/V(G/N)")]
    tail = [subquotient_term(*s) for s in specs]
    labels = ["VM(G,N)", "VM(G)", "VM(G/N)"] + [s[2] for s in specs] + ["0"]
    tail_maps = [lambda x: x, lambda x: alpha[x]]
    checks = {
        "exact at G/V(G)": group_exact(specs[0][:2], tail_maps[0], specs[1][:2], tail_maps[1], specs[2][:2]),
        "onto (G/N)/V(G/N)": group_surjective(specs[1][:2], tail_maps[1], specs[2][:2]),
    }
    notes = []
    if v.is_abelian_variety:
        sd = square_data(t, cap=cap)
        les = sd.les("pair")
        a_k, a_x, a_y = tail
        phi_k = phi_alpha(sd, a_k)
        phi_x = _require_iso(pi1_map(sd.bar_g, les.hx[1], a_x, lambda x: x), "pi_1(bar G)")
        phi_y = _require_iso(pi1_map(sd.bar_gn, les.hy[1], a_y, lambda x: x), "pi_1(bar G/N)")
        m3 = a_k.map_to(a_x)
        m4 = a_x.map_to(a_y, lambda x: alpha[x])
        if not (phi_x @ les.inc[1]).equals(m3 @ phi_k) or not (phi_y @ les.proj[1]).equals(m4 @ phi_x):
            raise IllDefinedHom("group-level tail maps disagree with the bar-model sequence")
        terms = [les.hk[2].group, les.hx[2].group, les.hy[2].group, a_k.group, a_x.group, a_y.group,
                 FgAbGroup.trivial()]
        maps = [les.inc[2], les.proj[2], phi_k @ les.connecting[2], m3, m4, None]
        notes.append("multiplier slots: bar model, pi_2 of kernels (degree shift)")
    else:
        terms = [Unknown("VM(G,N)") if not n.is_trivial() else FgAbGroup.trivial(),
                 _abelian_multiplier_slot(g, v, "VM(G)"),
                 _abelian_multiplier_slot(q.group, v, "VM(G/N)")]
        terms += [x.group if x is not None else Unknown(lab) for x, lab in zip(tail, labels[3:6])]
        terms.append(FgAbGroup.trivial())
        maps = [None] * 6
        if all(x is not None for x in tail):
            maps[3] = tail[0].map_to(tail[1])
            maps[4] = tail[1].map_to(tail[2], lambda x: alpha[x])
        if v.tag == "nilpotent":
            notes.append("absolute multipliers of abelian groups from the nilpotent multiplier formula")
    return _report(ExactSeqInstance(terms, maps, labels), checks, notes)


@dataclass(eq=False)
class TripleLes:
    first: SequenceReport
    second: SequenceReport
    pi0_method: str

    @property
    def exact(self) -> bool:
        return self.first.exact and self.second.exact

    def to_json(self) -> dict:
        return {"first": self.first.to_json(), "second": self.second.to_json(),
                "pi0_method": self.pi0_method}


def sharp_q_term(t: TripleInstance, q: int) -> AbelianSubquotient:
    """``(M cap N)/(M #_q N)``."""
    return AbelianSubquotient(t.m_cap_n, sharp_q(t.g, t.m, t.n, q), "(M^N)/(M#qN)")


def _triple_side(t: TripleInstance, v: VarietySpec, side: str, cap: int):
    """One of the two sequences ending in ``N/[NV*G] -> MN/M[NV*G] -> 0`` (side alpha)
    or ``M/[MV*G] -> MN/N[MV*G] -> 0`` (side beta)."""
    g = t.g
    a, b = (t.n, t.m) if side == "alpha" else (t.m, t.n)
    la, lb = ("N", "M") if side == "alpha" else ("M", "N")
    lue = cached_lue(g, a, v)
    spec_k = (a, lue, f"{la}/[{la}V*G]")
    spec_y = (t.mn, product(b, lue), f"MN/{lb}[{la}V*G]")
    tail = [subquotient_term(*spec_k), subquotient_term(*spec_y)]
    first_vm = "VM(G,N)" if side == "alpha" else "VM(G,M)"
    quot_vm = "VM(G/M,MN/M)" if side == "alpha" else "VM(G/N,MN/N)"
    labels = ["VM(G,M,N)", first_vm, quot_vm, "pi0(ker(alpha,gamma))", spec_k[2], spec_y[2], "0"]
    ident = lambda x: x  # noqa: E731
    checks = {f"onto {spec_y[2]}": group_surjective(spec_k[:2], ident, spec_y[:2])}
    pi0_method = "unknown"
    if v.is_abelian_variety:
        sd = square_data(t, cap=cap)
        les = sd.les(side)
        a_k, a_y = tail
        phi_k = phi_alpha(sd, a_k) if side == "alpha" else phi_beta(sd, a_k)
        phi_y = _phi_quotient_kernel(sd, "gamma" if side == "alpha" else "delta", a_y)
        m = a_k.map_to(a_y)
        if not (phi_y @ les.proj[1]).equals(m @ phi_k):
            raise IllDefinedHom("group-level tail map disagrees with the bar-model sequence")
        terms = [les.hk[2].group, les.hx[2].group, les.hy[2].group, les.hk[1].group,
                 a_k.group, a_y.group, FgAbGroup.trivial()]
        maps = [les.inc[2], les.proj[2], les.connecting[2], phi_k @ les.inc[1], m, None]
        pi0_method = "bar-model"
    else:
        terms = [Unknown("VM(G,M,N)"), Unknown(first_vm), Unknown(quot_vm), Unknown(labels[3])]
        terms += [x.group if x is not None else Unknown(lab) for x, lab in zip(tail, labels[4:6])]
        terms.append(FgAbGroup.trivial())
        maps = [None] * 6
        if all(x is not None for x in tail):
            maps[4] = tail[0].map_to(tail[1])
        if v.tag == "burnside" and t.mn.order == g.order:
            p0 = sharp_q_term(t, v.param)
            terms[3] = p0.group
            pi0_method = "sharp-q"
            if tail[0] is not None:
                maps[3] = p0.map_to(tail[0])
            checks[f"exact at {spec_k[2]}"] = group_exact((t.m_cap_n, p0.bottom), ident, spec_k[:2],
                                                          ident, spec_y[:2])
    return _report(ExactSeqInstance(terms, maps, labels), checks), pi0_method


def les_triple(t: TripleInstance, v: VarietySpec, cap: int = DEFAULT_CAP) -> TripleLes:
    first, method = _triple_side(t, v, "alpha", cap)
    second, _ = _triple_side(t, v, "beta", cap)
    return TripleLes(first, second, method)


def ellis_triple_tail(t: TripleInstance) -> SequenceReport:
    """``(M cap N)/[M cap N, G][M, N] -> N/[N,G] -> MN/M[N,G] -> 0``."""
    g = t.g
    gw = g.whole()
    bottom0 = product(commutator_subgroup(t.m_cap_n, gw), commutator_subgroup(t.m, t.n))
    ng = commutator_subgroup(t.n, gw)
    terms = [AbelianSubquotient(t.m_cap_n, bottom0, "(M^N)/[M^N,G][M,N]"),
             AbelianSubquotient(t.n, ng, "N/[N,G]"),
             AbelianSubquotient(t.mn, product(t.m, ng), "MN/M[N,G]")]
    maps = [terms[0].map_to(terms[1]), terms[1].map_to(terms[2]), None]
    seq = ExactSeqInstance([x.group for x in terms] + [FgAbGroup.trivial()], maps,
                           [x.label for x in terms] + ["0"])
    return _report(seq)


def column_les_report(t: TripleInstance, side: str = "beta", cap: int = DEFAULT_CAP) -> SequenceReport:
    """The full bar-model sequence of ``D -> ker beta -> ker delta`` (or the alpha column)."""
    return _report(square_data(t, cap=cap).les(side).sequence())


# -- functoriality ------------------------------------------------------------

def induced_map(f: TripleMorphism, v: VarietySpec, cap: int = DEFAULT_CAP) -> AbHom:
    """Map of bar-model triple multipliers induced by a triple morphism."""
    if not v.is_abelian_variety:
        raise MethodMismatch("induced maps are available for bar-model multipliers only")
    src, dst = square_data(f.src, cap=cap), square_data(f.dst, cap=cap)
    hs, hd = src.homology("double", 2), dst.homology("double", 2)
    return induced_on_homology(hs, hd, src.double.map_to(dst.double, f.fmap, 2))


def multiplier_group(t: TripleInstance, cap: int = DEFAULT_CAP) -> FgAbGroup:
    """The bar-model multiplier in its computed (non-canonical) presentation."""
    return square_data(t, cap=cap).homology("double", 2).group
