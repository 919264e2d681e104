from __future__ import annotations


class SwmCalcError(Exception):
    """Base class for every error raised by swm_calc."""


class InvalidParameterError(SwmCalcError, ValueError):
    """A parameter is outside its admissible range (m < 1, malformed label, bad flag value)."""


class UnsupportedLabelError(SwmCalcError, ValueError):
    """The operation is not defined for this kind of module label."""


class MismatchedParameterError(SwmCalcError, ValueError):
    """Two operands were built for different values of m."""


class InconsistencyError(SwmCalcError):
    """Exact data contradicts itself, e.g. a non-rational indicial root."""


class LogarithmicSolutionError(SwmCalcError):
    """A resonant Frobenius step has a nonzero obstruction."""

    def __init__(self, message: str, residual: object) -> None:
        super().__init__(message)
        self.residual = residual


class DomainError(SwmCalcError, ValueError):
    """Evaluation point outside the domain of the function."""


class PoleError(SwmCalcError, ValueError):
    """Gamma (or a Gamma ratio) evaluated at a pole."""


class ConvergenceError(SwmCalcError):
    """Integral parameters lie outside the absolute-convergence window of the region."""


class AccuracyError(SwmCalcError):
    """Quadrature refinement levels disagree by more than the tolerance."""

    def __init__(self, message: str, estimate: float) -> None:
        super().__init__(message)
        self.estimate = estimate


class IllConditionedError(SwmCalcError):
    """Matching matrix too ill-conditioned to solve for the connection matrix."""

    def __init__(self, message: str, condition: float) -> None:
        super().__init__(message)
        self.condition = condition
