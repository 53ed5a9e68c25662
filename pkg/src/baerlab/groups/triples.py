"""Triples ``(G, M, N)`` of a group with two normal subgroups, and their morphisms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ..errors import NotAHomomorphism, NotNormal, SubgroupNotPreserved
from .finite import (FiniteGroup, Quotient, Subgroup, intersection, is_homomorphism, product,
                     quotient_group)


@dataclass(frozen=True, eq=False)
class TripleInstance:
    g: FiniteGroup
    m: Subgroup
    n: Subgroup
    name: str = ""

    def __post_init__(self):
        for label, s in (("M", self.m), ("N", self.n)):
            if s.parent is not self.g:
                raise ValueError(f"{label} is not a subgroup of G")
            if not s.is_normal():
                raise NotNormal(f"{label} is not normal in G")

    @classmethod
    def pair(cls, g: FiniteGroup, n: Subgroup, name: str = "") -> "TripleInstance":
        """The triple ``(G, N, N)`` standing for the pair ``(G, N)``."""
        return cls(g, n, n, name)

    @cached_property
    def mn(self) -> Subgroup:
        return product(self.m, self.n)

    @cached_property
    def m_cap_n(self) -> Subgroup:
        return intersection(self.m, self.n)

    @cached_property
    def mod_n(self) -> Quotient:
        return quotient_group(self.g, self.n)

    @cached_property
    def mod_m(self) -> Quotient:
        return quotient_group(self.g, self.m)

    @cached_property
    def mod_mn(self) -> Quotient:
        return quotient_group(self.g, self.mn)

    def describe(self) -> str:
        return self.name or f"(G|{self.g.order}|, M|{self.m.order}|, N|{self.n.order}|)"


@dataclass(frozen=True, eq=False)
class TripleMorphism:
    src: TripleInstance
    dst: TripleInstance
    fmap: tuple[int, ...]


def triple_hom_apply(fmap: Sequence[int], src: TripleInstance, dst: TripleInstance) -> TripleMorphism:
    """Certify that ``fmap`` is a homomorphism ``G1 -> G2`` with ``f(M1) <= M2``, ``f(N1) <= N2``."""
    fmap = tuple(fmap)
    if not is_homomorphism(src.g, dst.g, fmap):
        raise NotAHomomorphism("element map does not respect multiplication")
    for label, a, b in (("M", src.m, dst.m), ("N", src.n, dst.n)):
        if any(fmap[x] not in b for x in a.elements):
            raise SubgroupNotPreserved(f"{label}1 is not mapped into {label}2")
    return TripleMorphism(src, dst, fmap)


def identity_morphism(t: TripleInstance) -> TripleMorphism:
    return triple_hom_apply(range(t.g.order), t, t)


def compose(f: TripleMorphism, g: TripleMorphism) -> TripleMorphism:
    """``g o f``."""
    if f.dst is not g.src:
        raise ValueError("morphisms are not composable")
    return TripleMorphism(f.src, g.dst, tuple(g.fmap[x] for x in f.fmap))
