"""Typed errors, mapped to CLI exit codes by depthgeom.cli."""


class DepthGeomError(Exception):
    """Base class for all library errors."""

    exit_code = 1


class ParseError(DepthGeomError):
    """Malformed instance file; carries location information when known."""

    exit_code = 2

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class DimensionMismatchError(DepthGeomError):
    exit_code = 3


class DegeneracyError(DepthGeomError):
    """Input violates a general-position or non-degeneracy precondition."""

    exit_code = 3


class PreconditionError(DepthGeomError):
    exit_code = 3


class OptimizationFailure(DepthGeomError):
    """Numeric search did not reach a certifiable point; carries the best iterate."""

    exit_code = 3

    def __init__(self, message, best=None, value=None):
        super().__init__(message)
        self.best = best
        self.value = value


class BudgetExceededError(DepthGeomError):
    exit_code = 4


class ConsistencyError(DepthGeomError):
    """A guarantee that must hold by construction failed: treated as a bug signal."""

    exit_code = 5
