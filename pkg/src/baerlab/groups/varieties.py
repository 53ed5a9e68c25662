"""Varieties of groups and the subgroups they define on a finite group.

Verbal subgroups and Lue products ``[N V* G]`` are computed from their
definition by enumerating every instance of every law; no closed formula
for a particular variety is used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product as iproduct

from ..errors import NotNormal, ParseError
from .finite import FiniteGroup, Subgroup, closure, commutator_subgroup, intersection
from .words import Word, left_normed, power


@dataclass(frozen=True)
class VarietySpec:
    tag: str  # "abelian" | "burnside" | "nilpotent"
    param: int = 0

    def __post_init__(self):
        if self.tag == "burnside" and self.param < 2:
            raise ValueError("exponent q must be at least 2")
        if self.tag == "nilpotent" and self.param < 1:
            raise ValueError("nilpotency class c must be at least 1")
        if self.tag not in ("abelian", "burnside", "nilpotent"):
            raise ValueError(f"unsupported variety {self.tag!r}")

    @classmethod
    def abelian(cls) -> "VarietySpec":
        return cls("abelian")

    @classmethod
    def abelian_exp(cls, q: int) -> "VarietySpec":
        return cls("burnside", q)

    @classmethod
    def nilpotent(cls, c: int) -> "VarietySpec":
        return cls("nilpotent", c)

    @classmethod
    def parse(cls, text: str) -> "VarietySpec":
        text = text.strip().lower()
        if text == "abelian":
            return cls.abelian()
        m = re.fullmatch(r"(burnside|nilpotent)(?:-[qc])?[-:](\d+)", text)
        if not m:
            raise ParseError(f"unknown variety {text!r}")
        try:
            return cls(m.group(1), int(m.group(2)))
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @property
    def laws(self) -> tuple[Word, ...]:
        x = [((i, 1),) for i in range(max(2, self.param + 1))]
        if self.tag == "abelian":
            return (left_normed(x[:2]),)
        if self.tag == "burnside":
            return (left_normed(x[:2]), power(x[0], self.param))
        return (left_normed(x[: self.param + 1]),)

    @property
    def is_abelian_variety(self) -> bool:
        return self.tag == "abelian" or (self.tag == "nilpotent" and self.param == 1)

    def __str__(self) -> str:
        if self.tag == "abelian":
            return "abelian"
        return f"{self.tag}:{self.param}"


def _arity(w: Word) -> int:
    return 1 + max(g for g, _ in w)


def law_values(g: FiniteGroup, v: VarietySpec) -> set[int]:
    out = set()
    for law in v.laws:
        for args in iproduct(range(g.order), repeat=_arity(law)):
            out.add(g.evaluate(law, args))
    return out


def verbal_subgroup(g: FiniteGroup, v: VarietySpec) -> Subgroup:
    """``V(G)``: closure of all law values."""
    return closure(g, law_values(g, v))


def lue_product(g: FiniteGroup, n: Subgroup, v: VarietySpec) -> Subgroup:
    """``[N V* G]``: closure of ``law(.., g_i x, ..) law(..)^-1`` for ``x`` in ``N``."""
    if not n.is_normal():
        raise NotNormal("Lue product needs a normal subgroup")
    vals = set()
    for law in v.laws:
        k = _arity(law)
        for args in iproduct(range(g.order), repeat=k):
            base_inv = g.inv(g.evaluate(law, args))
            for i in range(k):
                a = list(args)
                for x in n.elements:
                    a[i] = g.mul(args[i], x)
                    vals.add(g.mul(g.evaluate(law, a), base_inv))
    return closure(g, vals)


def sharp_q(g: FiniteGroup, m: Subgroup, n: Subgroup, q: int) -> Subgroup:
    """``M #_q N``: closure of ``[x, y] t^q`` with x in M, y in N, t in M cap N."""
    if not (m.is_normal() and n.is_normal()):
        raise NotNormal("M #_q N needs normal subgroups")
    if q < 1:
        raise ValueError("q must be positive")
    mn = intersection(m, n)
    comms = {g.commutator(x, y) for x in m.elements for y in n.elements}
    powers = {g.power(t, q) for t in mn.elements}
    return closure(g, {g.mul(c, p) for c in comms for p in powers})


def gamma_series(g: FiniteGroup, c: int) -> list[Subgroup]:
    """Lower central series ``[gamma_1, ..., gamma_{c+1}]``."""
    out = [g.whole()]
    for _ in range(c):
        out.append(commutator_subgroup(out[-1], g.whole()))
    return out


def iterated_commutator(n: Subgroup, g: FiniteGroup, c: int) -> Subgroup:
    """``[N, G, ..., G]`` with ``c`` copies of G."""
    out = n
    for _ in range(c):
        out = commutator_subgroup(out, g.whole())
    return out
