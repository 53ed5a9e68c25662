"""Exact integer linear algebra and finitely generated abelian groups."""

from .fgab import (
    AbHom,
    DirectedSystemAb,
    FgAbGroup,
    HomParts,
    canonical_form,
    colimit,
    direct_sum,
    direct_sum_hom,
    exterior_square,
    hom_parts,
    is_isomorphic,
    tensor,
    tor,
)
from .matrix import IntMatrix
from .smith import (
    SmithDecomposition,
    column_span_basis,
    elementary_divisors,
    kernel_basis,
    matrix_rank,
    smith,
    smith_normal_form,
    solve,
    solve_matrix,
)

__all__ = [
    "AbHom", "DirectedSystemAb", "FgAbGroup", "HomParts", "IntMatrix", "SmithDecomposition",
    "canonical_form", "colimit", "column_span_basis", "direct_sum", "direct_sum_hom",
    "elementary_divisors", "exterior_square", "hom_parts", "is_isomorphic", "kernel_basis",
    "matrix_rank", "smith", "smith_normal_form", "solve", "solve_matrix", "tensor", "tor",
]
