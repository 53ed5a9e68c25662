"""Exception hierarchy. Every error carries a short ``code`` used in reports."""


class BaerLabError(Exception):
    code = "error"


class IllDefinedHom(BaerLabError):
    code = "ill-defined-hom"


class LimitExceeded(BaerLabError):
    code = "limit-exceeded"


class NotNormal(BaerLabError):
    code = "not-normal"


class MismatchedParent(BaerLabError):
    code = "mismatched-parent"


class NotAHomomorphism(BaerLabError):
    code = "not-a-homomorphism"


class SubgroupNotPreserved(BaerLabError):
    code = "subgroup-not-preserved"


class DegreeOutOfRange(BaerLabError):
    code = "degree-out-of-range"


class SizeCapExceeded(BaerLabError):
    code = "size-cap-exceeded"


class IdentityViolation(BaerLabError):
    code = "simplicial-identity-violated"


class NotSurjective(BaerLabError):
    code = "not-surjective"


class Pi1NotAbelian(BaerLabError):
    code = "pi1-not-abelian"


class NotFree(BaerLabError):
    code = "not-free"


class NonDirected(BaerLabError):
    code = "non-directed"


class ColimitNotFinite(BaerLabError):
    code = "colimit-not-finite"


class CoprimalityViolated(BaerLabError):
    code = "coprimality-violated"


class MethodMismatch(BaerLabError):
    code = "method-mismatch"


class MultiplierUnavailable(BaerLabError):
    code = "multiplier-unavailable"


class Inconsistent(BaerLabError):
    code = "inconsistent"


class InexactRow(BaerLabError):
    code = "inexact-row"


class NotIsomorphism(BaerLabError):
    code = "not-an-isomorphism"


class HypothesisUnverified(BaerLabError):
    code = "hypothesis-unverified"


class ParseError(BaerLabError):
    code = "parse-error"

    def __init__(self, message, path=None, line=None):
        where = ""
        if path is not None:
            where = f"{path}:{line}: " if line is not None else f"{path}: "
        super().__init__(where + message)
        self.path = path
        self.line = line
