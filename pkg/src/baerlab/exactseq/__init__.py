from .extensions import abelian_extensions, lr_nonzero
from .sequence import (ExactnessReport, ExactSeqInstance, FiveLemmaVerdict, SlotReport,
                       TermConstraint, Unknown, check_slot, five_lemma, inverse_iso,
                       solve_unknowns, verify_exactness)

__all__ = [
    "abelian_extensions", "lr_nonzero", "ExactnessReport", "ExactSeqInstance", "FiveLemmaVerdict",
    "SlotReport", "TermConstraint", "Unknown", "check_slot", "five_lemma", "inverse_iso",
    "solve_unknowns", "verify_exactness",
]
