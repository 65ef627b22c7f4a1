"""Exception types shared across the package.

Everything that signals bad input derives from ValueError so callers can
catch broadly; NoConvergence derives from RuntimeError because the input
was fine and the iteration simply ran out of budget.
"""


class ParseError(ValueError):
    """Malformed dataset text (bad line, length mismatch, empty input)."""


class InvalidArgument(ValueError):
    """An argument violates a documented precondition."""


class DimensionError(ValueError):
    """A vector or matrix has the wrong length or shape."""


class TooLarge(InvalidArgument):
    """The requested object exceeds a hard size guard."""


class NotConnected(ValueError):
    """The incidence bipartite graph is not connected."""


class UndefinedCorrelation(ValueError):
    """A rank correlation is undefined (constant input vector)."""


class NoConvergence(RuntimeError):
    """Iteration budget exhausted before the stopping rule fired.

    Carries the last Perron bounds and the iteration count so callers can
    inspect how close the run got and decide whether to loosen the
    tolerance or raise the budget.
    """

    def __init__(self, message, lower=None, upper=None, iterations=None):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.iterations = iterations
