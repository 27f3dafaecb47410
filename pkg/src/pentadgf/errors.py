"""Exception types shared across the package."""


class EvaluationError(Exception):
    """Base class for numeric evaluation failures."""


class DomainError(EvaluationError, ValueError):
    """Argument outside the documented domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at, or too close to, a pole."""


class ContourSpecError(EvaluationError, ValueError):
    """A contour specification cannot satisfy its truncation or validity rules."""


class BoundaryZeroError(EvaluationError):
    """A contour for zero counting passes too close to a zero of the function."""


class ConvergenceError(EvaluationError):
    """Refinement budget exhausted before reaching the requested tolerance.

    Carries the best result obtained so far in ``best`` (an EvalResult or None).
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class ConsistencyError(EvaluationError):
    """Two independent evaluations of the same quantity disagree."""
