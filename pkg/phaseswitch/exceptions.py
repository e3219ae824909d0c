from typing import Any, Optional


class PhaseSwitchError(Exception):
    """Base class for every error raised by phaseswitch."""


class DomainError(PhaseSwitchError, ValueError):
    """An argument lies outside the domain of the operation (e.g. a non-finite phase)."""


class UndefinedPhaseError(PhaseSwitchError, ValueError):
    """A phase was requested from a field with zero amplitude."""


class InvalidParametersError(PhaseSwitchError, ValueError):
    """
    The parameter set violates one or more invariants.

    Attributes:
        report: The validation report listing every violation.
    """

    def __init__(self, report: Any):
        self.report = report
        violations = "; ".join(v.message for v in report.violations)
        super().__init__(f"Inadmissible parameters: {violations}")


class ClosureError(PhaseSwitchError, ValueError):
    """The multiphoton closure Δp − Δ₁ = Δc − Δ₂ does not hold."""


class SingularityError(PhaseSwitchError, ArithmeticError):
    """
    The steady-state denominator Λ vanishes at the given parameter point.

    Attributes:
        point: Description of the parameter point (detunings and couplings).
    """

    def __init__(self, message: str, point: Optional[dict] = None):
        self.point = point or {}
        if self.point:
            details = ", ".join(f"{k}={v:.6g}" for k, v in self.point.items())
            message = f"{message} at {details}"
        super().__init__(message)


class UndefinedTransmissionError(PhaseSwitchError, ValueError):
    """Transmission is undefined because both input fields are zero."""


class DegenerateBasisError(PhaseSwitchError, ValueError):
    """Both coupling fields vanish, so no dressed basis exists."""


class StepTooLargeError(PhaseSwitchError, ValueError):
    """The finite-difference step lets the transfer phase jump by more than π/2."""


class ConfigError(PhaseSwitchError, ValueError):
    """
    A run configuration could not be parsed or validated.

    Attributes:
        line: 1-based line number of the offending line, when known.
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


__all__ = [
    "PhaseSwitchError",
    "DomainError",
    "UndefinedPhaseError",
    "InvalidParametersError",
    "ClosureError",
    "SingularityError",
    "UndefinedTransmissionError",
    "DegenerateBasisError",
    "StepTooLargeError",
    "ConfigError",
]
