"""Exception hierarchy shared by every layer of the library."""


class DomainError(ValueError):
    """An operation was asked for something outside its mathematical domain.

    ``code`` is a short machine-readable tag; the CLI prints it as
    ``error: <code>: <message>``.
    """

    code = "domain"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class ContextMismatch(DomainError):
    code = "context-mismatch"


class NotInvertible(DomainError):
    code = "not-invertible"


class InfiniteDecomposition(DomainError):
    code = "infinite-decomposition"


class PreconditionError(DomainError):
    code = "precondition"


class BudgetError(DomainError):
    code = "budget"


class UnsupportedError(DomainError):
    code = "unsupported"


class ParseError(DomainError):
    code = "parse"
