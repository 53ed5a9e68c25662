"""Finite and finitely presented groups."""

from .finite import (
    FiniteGroup,
    Quotient,
    Subgroup,
    all_subgroups,
    centre,
    closure,
    commutator_subgroup,
    direct_product,
    intersection,
    is_homomorphism,
    join,
    normal_closure,
    normal_subgroups,
    product,
    quotient_group,
)
from .hall import hall_basis, hall_witt, witt_count
from .subquotient import AbelianSubquotient, abelian_structure
from .todd_coxeter import CosetTable, todd_coxeter
from .triples import TripleInstance, TripleMorphism, compose, identity_morphism, triple_hom_apply
from .varieties import (
    VarietySpec,
    gamma_series,
    iterated_commutator,
    lue_product,
    sharp_q,
    verbal_subgroup,
)
from .words import Presentation, Word, free_reduce, parse_word

__all__ = [
    "FiniteGroup", "Quotient", "Subgroup", "all_subgroups", "centre", "closure",
    "commutator_subgroup", "direct_product", "intersection", "is_homomorphism", "join",
    "normal_closure", "normal_subgroups", "product", "quotient_group", "hall_basis", "hall_witt",
    "witt_count", "AbelianSubquotient", "abelian_structure", "CosetTable", "todd_coxeter",
    "TripleInstance", "TripleMorphism", "compose", "identity_morphism", "triple_hom_apply",
    "VarietySpec", "gamma_series", "iterated_commutator", "lue_product", "sharp_q",
    "verbal_subgroup", "Presentation", "Word", "free_reduce", "parse_word",
]
