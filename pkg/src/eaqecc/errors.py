"""Exception hierarchy shared by every module of the package."""


class EAQECCError(Exception):
    """Base class for all errors raised by this package."""


class SpecMismatch(EAQECCError, ValueError):
    pass


class DivisionByZero(EAQECCError, ZeroDivisionError):
    pass


class NoSubfieldRegistered(EAQECCError, ValueError):
    pass


class SearchExhausted(EAQECCError, RuntimeError):
    pass


class ShapeMismatch(EAQECCError, ValueError):
    pass


class AmbientMismatch(EAQECCError, ValueError):
    pass


class LayoutMismatch(EAQECCError, ValueError):
    pass


class BudgetExceeded(EAQECCError, RuntimeError):
    """Exhaustive enumeration would visit more codewords than allowed."""

    def __init__(self, needed, budget):
        super().__init__(
            f"enumeration needs {needed} codewords but the budget is {budget}; "
            "lower n, raise --budget, or skip the distance"
        )
        self.needed = needed
        self.budget = budget


class InternalInconsistency(EAQECCError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class DimTooLarge(EAQECCError, ValueError):
    pass


class NotADecomposition(EAQECCError, ValueError):
    pass


class EllipticOutsideChar2(NotADecomposition):
    pass


class UndefinedPrime(EAQECCError, ValueError):
    pass


class InvariantViolation(EAQECCError, ValueError):
    pass


class RangeViolation(EAQECCError, ValueError):
    pass


class BadRange(EAQECCError, ValueError):
    pass


class PreconditionViolated(EAQECCError, ValueError):
    pass


class NotNested(PreconditionViolated):
    pass


class DimensionClaimFailed(EAQECCError):
    """A dimension asserted by the puncturing construction did not hold."""

    def __init__(self, claim, expected, actual):
        super().__init__(f"{claim}: expected {expected}, computed {actual}")
        self.claim = claim
        self.expected = expected
        self.actual = actual


class CodeFileError(EAQECCError, ValueError):
    pass
