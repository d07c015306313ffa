"""Exception types shared across the package."""


class QsymError(Exception):
    """Base class for every error raised by this package."""


class VariableCountMismatch(QsymError):
    """Two ring elements with different variable counts were combined."""


class SubstitutionError(QsymError):
    """A non-invertible image was substituted into a negatively-exponented variable."""


class NotContained(QsymError):
    """The inner shape is not contained in the outer one."""


class MatrixError(QsymError):
    """Matrix input violates a shape requirement (non-square, odd size, not skew)."""


class PreconditionError(QsymError):
    """An operation was called outside its domain (e.g. too many rows for the variable count)."""


class TermBudgetExceeded(QsymError):
    """A computation produced more terms than QSYM_MAX_TERMS allows."""


class ParseError(QsymError):
    """Malformed textual input (polynomial or partition)."""
