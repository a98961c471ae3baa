"""Exception hierarchy shared by the library and the command line tool."""


class HermomentsError(Exception):
    """Base class for every error raised by this package."""


class UsageError(HermomentsError, ValueError):
    """Arguments violate an operation's preconditions (CLI exit code 2)."""


class DomainError(HermomentsError, ArithmeticError):
    """Evaluation point outside the region where a quantity is defined."""


class ConsistencyError(HermomentsError):
    """Two routes that must agree exactly did not (CLI exit code 1)."""


class NumericalError(HermomentsError, ArithmeticError):
    """A floating point procedure failed, e.g. an eigensolver did not converge."""

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics
