"""Exception hierarchy shared by the whole package.

Every error carries a machine-readable ``category`` string; the CLI prints it
on stderr and the HTTP service returns it in the error body, so scripted
callers never have to parse prose.
"""

from __future__ import annotations


class LeviformError(Exception):
    """Base class for all domain errors raised by this package."""

    category = "ERROR"

    def __init__(self, message: str, *, category: str | None = None):
        super().__init__(message)
        if category is not None:
            self.category = category


class ParseError(LeviformError):
    """Syntax or vocabulary error in an input expression (1-based position)."""

    category = "PARSE_ERROR"

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class VariableMismatchError(LeviformError):
    category = "VARIABLE_MISMATCH"


class SingularMatrixError(LeviformError):
    category = "SINGULAR_MATRIX"


class DegreeOverflowError(LeviformError):
    category = "DEGREE_OVERFLOW"


class ZeroInputError(LeviformError):
    category = "ZERO_INPUT"


class NotInMaximalIdealError(LeviformError):
    category = "NOT_IN_MAXIMAL_IDEAL"


class NonIsolatedSingularityError(LeviformError):
    category = "NON_ISOLATED"


class NotQuasihomogeneousError(LeviformError):
    category = "NOT_QUASIHOMOGENEOUS"


class NotSemiquasihomogeneousError(LeviformError):
    category = "NOT_SEMIQUASIHOMOGENEOUS"

    def __init__(self, message: str, *, reason: str = "NO_WEIGHTS", category: str | None = None):
        super().__init__(message, category=category)
        self.reason = reason  # NO_WEIGHTS | NON_ISOLATED


class NotRealValuedError(LeviformError):
    category = "NOT_REAL_VALUED"


class NonzeroConstantTermError(LeviformError):
    category = "NONZERO_CONSTANT_TERM"


class PrincipalPartError(LeviformError):
    """The lowest-order part of the input does not have the required shape."""

    category = "PRINCIPAL_PART_NOT_HOMOGENEOUS"


class NotLeviFlatError(LeviformError):
    category = "NOT_LEVI_FLAT"


class UnsupportedDimensionError(LeviformError):
    category = "UNSUPPORTED_DIMENSION"


class DegreeCapExceededError(LeviformError):
    """A computation hit the configured total-degree resource cap.

    Deliberately distinct from any mathematical verdict: hitting the cap
    never means "infinite" or "not a member", it means "give me a bigger cap".
    """

    category = "RESOURCE_LIMIT"
