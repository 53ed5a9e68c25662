"""Bar models, quotient squares, multipliers of pairs and triples, and theorem-level reductions."""

from .bar import (DEFAULT_CAP, DEFAULT_T, BarModel, KernelModel, QuotientSquare, bar_level_maps,
                  bar_model, double_kernel, double_kernel_model, homology_group, quotient_square,
                  vertical_models)
from .complexes import KernelComplex, bar_boundary, nondegenerate_tuples
from .pipeline import (MultiplierResult, SequenceReport, SquareData, TripleLes, column_les_report,
                       ellis_triple_tail, induced_map, les_pair, les_triple, multiplier_group,
                       relative_multiplier_bar, schur_multiplier, sharp_q_term, square_data,
                       triple_multiplier_bar)
from .theorems import (Hypothesis, TorsionCertificate, TripleSystem, burns_ellis, certify_torsion,
                       chain_system, colimit_multiplier, finite_hypotheses,
                       free_abelian_pair_hypotheses, freeprod_multiplier,
                       nilpotent_triple_multiplier, witt_multiplier_free_abelian)

__all__ = [
    "DEFAULT_CAP", "DEFAULT_T", "BarModel", "KernelModel", "QuotientSquare", "bar_level_maps",
    "bar_model", "double_kernel", "double_kernel_model", "homology_group", "quotient_square",
    "vertical_models", "KernelComplex", "bar_boundary", "nondegenerate_tuples", "MultiplierResult",
    "SequenceReport", "SquareData", "TripleLes", "column_les_report", "ellis_triple_tail",
    "induced_map", "les_pair", "les_triple", "multiplier_group", "relative_multiplier_bar",
    "schur_multiplier", "sharp_q_term", "square_data", "triple_multiplier_bar", "Hypothesis",
    "TorsionCertificate", "TripleSystem", "burns_ellis", "certify_torsion", "chain_system",
    "colimit_multiplier", "finite_hypotheses", "free_abelian_pair_hypotheses",
    "freeprod_multiplier", "nilpotent_triple_multiplier", "witt_multiplier_free_abelian",
]
