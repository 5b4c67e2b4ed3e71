"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`HodgeLocusError`, so callers (and the command line front end) can
tell computational failures apart from programming errors.
"""


class HodgeLocusError(Exception):
    """Base class for all package errors."""


class UsageError(HodgeLocusError, ValueError):
    """Arguments violate an operation's preconditions."""


class ParseError(UsageError):
    """Malformed polynomial or data file."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where = f" ({where})"
        super().__init__(message + where)


class ResourceError(HodgeLocusError):
    """A graded piece is larger than the configured dimension cap."""


class NotRegularError(UsageError):
    """Generators do not form a regular sequence."""

    def __init__(self, message, degree=None):
        self.degree = degree
        super().__init__(message)


class SingularHypersurfaceError(NotRegularError):
    """The hypersurface is singular, so its Jacobian ring is not Artinian."""


class DegeneracyError(HodgeLocusError):
    """A solve that should be one-dimensional was not (non-generic instance)."""

    def __init__(self, message, dimension=None, seed=None):
        self.dimension = dimension
        self.seed = seed
        super().__init__(message)


class ConstructionError(HodgeLocusError):
    """Seeded construction ran out of retries."""

    def __init__(self, message, seeds=()):
        self.seeds = list(seeds)
        super().__init__(message)


class MembershipError(HodgeLocusError):
    """A polynomial is not in the ideal it was asked to be decomposed in."""


class VerificationError(HodgeLocusError):
    """A certificate check failed."""

    def __init__(self, message, degree=None):
        self.degree = degree
        super().__init__(message)
