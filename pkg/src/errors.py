"""Exceptions raised by the numerical modules and the experiment harness."""
from __future__ import annotations


class QMContinuityError(Exception):
    """Base class for all errors raised by this package."""


class StepUnderflowError(QMContinuityError):
    """Adaptive refinement needed more than the allowed number of steps."""


class NearPunctureError(QMContinuityError):
    """A path came closer to the puncture than the configured distance."""


class TangentialCrossingError(QMContinuityError):
    """Two cut crossings inside one segment could not be ordered."""


class UnsupportedDomainError(QMContinuityError):
    """The operation is not defined for this domain or support."""


class SupportEscapesDomainError(QMContinuityError):
    """A requested support disc does not fit inside the domain."""


class ExcessiveRejectionError(QMContinuityError):
    """Too many Monte-Carlo samples were rejected near the puncture."""


class NonzeroTotalMassError(QMContinuityError):
    """A form that must integrate to zero does not."""


class UnequalMassError(QMContinuityError):
    """Two area forms have different total integrals."""


class DegenerateInterpolantError(QMContinuityError):
    """The linear interpolation between two area forms is not positive."""


class BetaNotOneError(QMContinuityError):
    """The density ratio along an edge is not one near the edge ends."""


class DisplacementTooLargeError(QMContinuityError):
    """A map moves some point by at least the allowed displacement."""


class KappaNotFoundError(QMContinuityError):
    """No strip width keeps the rescaled isotopy inside the target strip."""


class NotEmbeddedError(QMContinuityError):
    """A curve self-intersects or is not isotopic to the core circle."""


class NotGraphNearMarkersError(QMContinuityError):
    """A target curve is not a graph over the marker windows."""


class ConfigInvalidError(QMContinuityError, ValueError):
    """The experiment configuration failed validation."""

    def __init__(self, diagnostics: list[str]):
        self.diagnostics = list(diagnostics)
        summary = "; ".join(self.diagnostics) if self.diagnostics else "empty configuration"
        super().__init__(f"Invalid configuration: {summary}")


class ExperimentError(QMContinuityError):
    """A module error raised while running a named experiment."""

    def __init__(self, experiment: str, message: str):
        self.experiment = experiment
        super().__init__(f"[{experiment}] {message}")
