"""Free-product and colimit decompositions, free abelian multipliers, torsion certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from ..abelian import DirectedSystemAb, FgAbGroup, colimit, direct_sum, is_isomorphic
from ..errors import (ColimitNotFinite, CoprimalityViolated, HypothesisUnverified, MethodMismatch,
                      MultiplierUnavailable, NonDirected)
from ..groups.finite import FiniteGroup, commutator_subgroup
from ..groups.hall import witt_count
from ..groups.subquotient import abelian_structure
from ..groups.triples import TripleInstance, compose, triple_hom_apply
from ..groups.varieties import VarietySpec
from .bar import DEFAULT_CAP
from .pipeline import MultiplierResult, induced_map, multiplier_group, triple_multiplier_bar


def burns_ellis(invariants: Sequence[int], c: int) -> FgAbGroup:
    """``M^(c)`` of the finite abelian group with the given invariant factors.

    For ``Z_{n_1} + ... + Z_{n_k}`` with ``n_{i+1} | n_i`` the value is the
    sum over ``i >= 2`` of ``Z_{n_i}`` with multiplicity
    ``chi_{c+1}(i) - chi_{c+1}(i-1)``.
    """
    ns = sorted((d for d in invariants if d > 1), reverse=True)
    parts = []
    for i in range(2, len(ns) + 1):
        parts += [ns[i - 1]] * (witt_count(i, c + 1) - witt_count(i - 1, c + 1))
    return FgAbGroup.from_cyclics(parts).canonical_group()


def witt_multiplier_free_abelian(n: int, c: int) -> FgAbGroup:
    """``M^(c)(Z^n)``: free abelian of rank ``chi_{c+1}(n)``."""
    if n < 0 or c < 1:
        raise ValueError("need n >= 0 and c >= 1")
    return FgAbGroup.free(witt_count(n, c + 1) if n else 0)


def abelianization_order(g: FiniteGroup) -> int:
    return g.order // commutator_subgroup(g.whole(), g.whole()).order


def nilpotent_triple_multiplier(t: TripleInstance, c: int, cap: int = DEFAULT_CAP) -> MultiplierResult:
    """``M^(c)(G,M,N)`` where a closed form applies.

    Class 1 is the bar-model value.  For ``c >= 2`` the value is zero when
    ``M`` or ``N`` is trivial, and otherwise only triples that reduce to an
    abelian group's absolute multiplier are covered.
    """
    if c == 1:
        return triple_multiplier_bar(t, cap)
    if t.m.is_trivial() or t.n.is_trivial():
        return MultiplierResult(FgAbGroup.trivial(), "les-forced", False, model="zero-object",
                                forced=True, notes=("double kernel is the zero object",))
    g = t.g.order
    # (G,M,M), (G,G,M) and (G,M,G) reduce to the pair (G,K); the pair (G,G) is M^(c)(G)
    if t.m.elements == t.n.elements or t.n.order == g:
        k = t.m
    elif t.m.order == g:
        k = t.n
    else:
        k = None
    if k is not None and k.order == g and t.g.is_abelian:
        value = burns_ellis(abelian_structure(t.g).group.invariant_factors, c)
        return MultiplierResult(value, "witt-formula", False, model="formula", forced=True,
                                notes=("abelian nilpotent multiplier formula",))
    raise MultiplierUnavailable(f"no computable M^({c}) for {t.describe()}")


def freeprod_multiplier(t1: TripleInstance, t2: TripleInstance, v: VarietySpec,
                        cap: int = DEFAULT_CAP) -> MultiplierResult:
    """Multiplier of the free-product triple as the sum of the factor multipliers."""
    if v.is_abelian_variety:
        f1, f2 = triple_multiplier_bar(t1, cap), triple_multiplier_bar(t2, cap)
        method = "theorem-3.6"
    elif v.tag == "nilpotent":
        a, b = abelianization_order(t1.g), abelianization_order(t2.g)
        if gcd(a, b) != 1:
            raise CoprimalityViolated(f"abelianization orders {a} and {b} are not coprime")
        f1, f2 = nilpotent_triple_multiplier(t1, v.param, cap), nilpotent_triple_multiplier(t2, v.param, cap)
        method = "theorem-3.8"
    else:
        raise MethodMismatch(f"no free-product formula for the variety {v}")
    value = direct_sum(f1.value, f2.value)
    return MultiplierResult(value, method, f1.degree_shift or f2.degree_shift,
                            model=f1.model if f1.model == f2.model else "mixed",
                            forced=f1.forced and f2.forced, factors=(f1, f2))


# -- directed systems -------------------------------------------------------

@dataclass(eq=False)
class TripleSystem:
    """Triples over a finite poset with a morphism for each listed pair ``i <= j``."""

    indices: tuple
    triples: dict
    morphisms: dict  # (i, j) -> TripleMorphism

    def closure(self) -> dict:
        """Morphisms for every comparable pair, composing along chains."""
        out = dict(self.morphisms)
        changed = True
        while changed:
            changed = False
            for (i, j), f in list(out.items()):
                for (k, l), h in list(out.items()):
                    if j == k and (i, l) not in out and i != l:
                        out[(i, l)] = compose(f, h)
                        changed = True
        return out


def colimit_multiplier(sys: TripleSystem, v: VarietySpec, max_order: int = 8,
                       cap: int = DEFAULT_CAP) -> tuple[FgAbGroup, FgAbGroup, str]:
    """Multiplier of the colimit triple against the colimit of the stage multipliers."""
    if not v.is_abelian_variety:
        raise MethodMismatch("colimits are compared through bar-model multipliers only")
    mors = sys.closure()
    for (i, j), f in mors.items():
        if f.src is not sys.triples[i] or f.dst is not sys.triples[j]:
            raise ValueError(f"morphism {i} -> {j} does not connect the listed triples")
    groups = {i: multiplier_group(sys.triples[i], cap) for i in sys.indices}
    trans = {(i, j): induced_map(f, v, cap) for (i, j), f in mors.items()}
    ab = DirectedSystemAb(tuple(sys.indices), frozenset(mors), groups, trans)
    top = ab.top()
    if top is None:
        raise NonDirected("finite directed poset without a top element")
    tt = sys.triples[top]
    if tt.g.order > max_order:
        raise ColimitNotFinite(f"colimit triple has order {tt.g.order} beyond the cap {max_order}")
    bad = ab.check_functoriality()
    if bad:
        raise ValueError(f"induced maps do not compose along {bad[:3]}")
    for (i, j), f in mors.items():
        for (k, l), h in mors.items():
            if j == k and (i, l) in mors and compose(f, h).fmap != mors[(i, l)].fmap:
                raise ValueError(f"morphisms {i} -> {j} -> {l} do not commute")
    lhs = triple_multiplier_bar(tt, cap).value
    rhs = colimit(ab).canonical_group()
    return lhs, rhs, "isomorphic" if is_isomorphic(lhs, rhs) else "not-isomorphic"


def chain_system(triples: Sequence[TripleInstance], maps: Sequence[Sequence[int]]) -> TripleSystem:
    """Linear system ``t_0 -> t_1 -> ...`` from element maps of consecutive stages."""
    idx = tuple(range(len(triples)))
    mors = {(i, i + 1): triple_hom_apply(m, triples[i], triples[i + 1]) for i, m in enumerate(maps)}
    return TripleSystem(idx, dict(enumerate(triples)), mors)


# -- torsion certificates -----------------------------------------------------

PAIR_RULE = ("Thm-pair-torsion", ("M1(G,N)", "M1(G/N)", "H3(G/N)"), 2, "M^(c)(G,N)")
TRIPLE_RULE = ("Thm-triple-torsion", ("M1(G,M,N)", "M1(G)", "H3(G/N)", "H3(G/M)", "H4(G/MN)"), 1,
               "M^(c)(G,M,N)")


@dataclass(frozen=True)
class Hypothesis:
    name: str
    torsion: bool
    provenance: str = "computed"  # "computed" | "asserted"

    def to_json(self) -> dict:
        return {"name": self.name, "torsion": self.torsion, "provenance": self.provenance}


@dataclass(frozen=True)
class TorsionCertificate:
    rule: str
    hypotheses: tuple
    conclusion: Optional[str]
    c_from: int
    missing: tuple = field(default=())

    @property
    def emitted(self) -> bool:
        return self.conclusion is not None

    def to_json(self) -> dict:
        return {"rule": self.rule, "hypotheses": [h.to_json() for h in self.hypotheses],
                "emitted": self.emitted, "conclusion": self.conclusion, "c_from": self.c_from,
                "failed": list(self.missing)}


def certify_torsion(inputs: Sequence[Hypothesis], c_target: int, rule: str = "pair",
                    strict: bool = False) -> TorsionCertificate:
    """Apply a torsion rule; the conclusion is emitted only if every hypothesis holds."""
    name, required, c0, target = PAIR_RULE if rule == "pair" else TRIPLE_RULE
    by_name = {h.name: h for h in inputs}
    unknown = set(by_name) - set(required)
    if unknown:
        raise ValueError(f"hypotheses not used by {name}: {sorted(unknown)}")
    if strict:
        asserted = [h.name for h in inputs if h.provenance == "asserted"]
        if asserted:
            raise HypothesisUnverified(f"asserted hypotheses in strict mode: {asserted}")
    failed = tuple(r for r in required if r not in by_name or not by_name[r].torsion)
    hyps = tuple(by_name[r] for r in required if r in by_name)
    ok = not failed and c_target >= c0
    if ok:
        conclusion = f"{target} is torsion for all c >= {c0}"
    else:
        conclusion = None
        if not failed:
            failed = (f"c = {c_target} is below {c0}",)
    return TorsionCertificate(name, hyps, conclusion, c0, failed)


def finite_hypotheses(rule: str = "pair") -> list[Hypothesis]:
    """All hypotheses of a rule for finite inputs: finite groups are torsion."""
    required = PAIR_RULE[1] if rule == "pair" else TRIPLE_RULE[1]
    return [Hypothesis(r, True, "computed") for r in required]


def free_abelian_pair_hypotheses(n: int) -> list[Hypothesis]:
    """Hypotheses for the pair ``(Z^n, Z^n)``: ``M(Z^n) = Z^{chi_2(n)}``, the quotient is trivial."""
    m1 = witt_multiplier_free_abelian(n, 1)
    return [Hypothesis("M1(G,N)", m1.is_finite, "computed"),
            Hypothesis("M1(G/N)", True, "computed"),
            Hypothesis("H3(G/N)", True, "computed")]
