"""Exception hierarchy.

Every library error carries a short machine-readable ``kind`` string which
the command line front end copies into its JSON error document.
"""


class LinRankError(ValueError):
    kind = "error"


class NotPrime(LinRankError):
    kind = "NotPrime"


class NotIrreducible(LinRankError):
    kind = "NotIrreducible"


class SizeBudgetExceeded(LinRankError):
    kind = "SizeBudgetExceeded"


class CtxMismatch(LinRankError):
    kind = "CtxMismatch"


class DivisionByZero(LinRankError, ZeroDivisionError):
    kind = "DivisionByZero"


class StrideMismatch(LinRankError):
    kind = "StrideMismatch"


class StrideNotCoprime(LinRankError):
    kind = "StrideNotCoprime"


class StrideNotOne(LinRankError):
    kind = "StrideNotOne"


class BothZero(LinRankError):
    kind = "BothZero"


class InternalInconsistency(LinRankError):
    kind = "InternalInconsistency"


class NotSquare(LinRankError):
    kind = "NotSquare"


class ShapeMismatch(LinRankError):
    kind = "ShapeMismatch"


class SingularW(LinRankError):
    kind = "SingularW"


class OutOfRange(LinRankError):
    kind = "OutOfRange"


class NotConsecutive(LinRankError):
    kind = "NotConsecutive"


class SizeMismatch(LinRankError):
    kind = "SizeMismatch"


class DegreeRange(LinRankError):
    kind = "DegreeRange"


class ZeroLeadingCoefficient(LinRankError):
    kind = "ZeroLeadingCoefficient"


class ParseError(LinRankError):
    kind = "ParseError"

    def __init__(self, message, token=None, position=None):
        super().__init__(message)
        self.token = token
        self.position = position


class ValidationError(LinRankError):
    kind = "ValidationError"
