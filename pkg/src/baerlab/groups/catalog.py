"""Fixture catalog: every group of order at most 12, from presentations."""

from __future__ import annotations

from functools import lru_cache

from .finite import FiniteGroup, normal_subgroups
from .triples import TripleInstance
from .words import Presentation

# name -> (generators, relators)
PRESENTATIONS: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {
    "1": ((), ()),
    "Z2": (("a",), ("a^2",)),
    "Z3": (("a",), ("a^3",)),
    "Z4": (("a",), ("a^4",)),
    "Z2xZ2": (("a", "b"), ("a^2", "b^2", "[a,b]")),
    "Z5": (("a",), ("a^5",)),
    "Z6": (("a",), ("a^6",)),
    "S3": (("a", "b"), ("a^2", "b^3", "(a b)^2")),
    "Z7": (("a",), ("a^7",)),
    "Z8": (("a",), ("a^8",)),
    "Z2xZ4": (("a", "b"), ("a^2", "b^4", "[a,b]")),
    "Z2xZ2xZ2": (("a", "b", "c"), ("a^2", "b^2", "c^2", "[a,b]", "[a,c]", "[b,c]")),
    "D4": (("r", "s"), ("r^4", "s^2", "(s r)^2")),
    "Q8": (("i", "j"), ("i^4", "i^2 j^-2", "j^-1 i j i")),
    "Z9": (("a",), ("a^9",)),
    "Z3xZ3": (("a", "b"), ("a^3", "b^3", "[a,b]")),
    "Z10": (("a",), ("a^10",)),
    "D5": (("r", "s"), ("r^5", "s^2", "(s r)^2")),
    "Z11": (("a",), ("a^11",)),
    "Z12": (("a",), ("a^12",)),
    "Z2xZ6": (("a", "b"), ("a^2", "b^6", "[a,b]")),
    "D6": (("r", "s"), ("r^6", "s^2", "(s r)^2")),
    "A4": (("a", "b"), ("a^2", "b^3", "(a b)^3")),
    "Dic3": (("a", "b"), ("a^6", "a^3 b^-2", "b^-1 a b a")),
}

# abelianization invariants and Schur multipliers of the catalog (standard tables)
KNOWN_ABELIANIZATION: dict[str, tuple[int, ...]] = {
    "1": (), "Z2": (2,), "Z3": (3,), "Z4": (4,), "Z2xZ2": (2, 2), "Z5": (5,), "Z6": (6,),
    "S3": (2,), "Z7": (7,), "Z8": (8,), "Z2xZ4": (2, 4), "Z2xZ2xZ2": (2, 2, 2), "D4": (2, 2),
    "Q8": (2, 2), "Z9": (9,), "Z3xZ3": (3, 3), "Z10": (10,), "D5": (2,), "Z11": (11,),
    "Z12": (12,), "Z2xZ6": (2, 6), "D6": (2, 2), "A4": (3,), "Dic3": (4,),
}


def presentation(name: str) -> Presentation:
    gens, rels = PRESENTATIONS[name]
    return Presentation.parse(gens, rels)


@lru_cache(maxsize=None)
def group(name: str) -> FiniteGroup:
    if name == "1":
        return FiniteGroup.trivial()
    return FiniteGroup.from_presentation(presentation(name))


def catalog_groups(max_order: int = 12) -> list[tuple[str, FiniteGroup]]:
    out = []
    for name in PRESENTATIONS:
        g = group(name)
        if g.order <= max_order:
            out.append((name, g))
    return out


TRIPLE_BASES = ("Z2xZ2", "Z4", "D4", "S3", "Q8")


def catalog_triples(bases=TRIPLE_BASES) -> list[TripleInstance]:
    """All ``(G, M, N)`` with M, N ranging over the normal subgroups of each base."""
    out = []
    for name in bases:
        g = group(name)
        normals = normal_subgroups(g)
        for i, m in enumerate(normals):
            for j, n in enumerate(normals):
                out.append(TripleInstance(g, m, n, f"{name}[M{i},N{j}]"))
    return out
