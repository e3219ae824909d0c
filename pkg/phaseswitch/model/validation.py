import math

from pydantic import BaseModel, Field

from phaseswitch.exceptions import InvalidParametersError
from phaseswitch.logger import logger
from phaseswitch.model.schema import CLOSURE_TOLERANCE, SystemParams

# Above this ratio γ₂/γ₃ the weak-field closed forms lose their accuracy.
GAMMA2_WARNING_RATIO = 0.1


class Violation(BaseModel):
    """
    A single violated invariant.

    Attributes:
        field (str): Dotted path of the offending parameter.
        message (str): Human-readable description.
    """
    field: str = Field(description="Dotted path of the offending parameter")
    message: str = Field(description="Description of the violated invariant")


class ValidationReport(BaseModel):
    violations: list[Violation] = Field(default_factory=list)
    warnings: list[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, field: str, message: str):
        self.violations.append(Violation(field=field, message=message))

    def lines(self) -> list[str]:
        return ([f"violation: {v.field}: {v.message}" for v in self.violations]
                + [f"warning: {w}" for w in self.warnings])


def validate(params: SystemParams) -> ValidationReport:
    """
    Check every invariant of a parameter set, including multiphoton closure.

    Args:
        params (SystemParams): The parameters to check.

    Returns:
        ValidationReport: Empty violations iff the parameters are admissible for steady-state operations.
    """
    report = ValidationReport()
    decays = params.decays
    medium = params.medium

    if decays.gamma_2 < 0:
        report.add('decays.gamma_2', f"gamma_2 must be >= 0, got {decays.gamma_2}")
    if decays.gamma_3 <= 0:
        report.add('decays.gamma_3', f"gamma_3 must be > 0, got {decays.gamma_3}")
    if decays.gamma_4 <= 0:
        report.add('decays.gamma_4', f"gamma_4 must be > 0, got {decays.gamma_4}")

    if medium.k13_ell < 0:
        report.add('medium.k13_ell', f"k13_ell must be >= 0, got {medium.k13_ell}")
    if medium.k14_ell < 0:
        report.add('medium.k14_ell', f"k14_ell must be >= 0, got {medium.k14_ell}")
    if medium.n_slices < 1:
        report.add('medium.n_slices', f"n_slices must be >= 1, got {medium.n_slices}")
    if medium.omega_ratio <= 0:
        report.add('medium.omega_ratio', f"omega_ratio must be > 0, got {medium.omega_ratio}")
    if medium.fluorescence_scale < 0:
        report.add('medium.fluorescence_scale',
                   f"fluorescence_scale must be >= 0, got {medium.fluorescence_scale}")

    residual = params.detunings.closure_residual
    if not abs(residual) < CLOSURE_TOLERANCE:
        report.add('detunings', f"multiphoton closure violated: (dp - d1) - (dc - d2) = {residual:.6g}")

    if decays.gamma_3 > 0 and decays.gamma_2 > GAMMA2_WARNING_RATIO * decays.gamma_3:
        report.warnings.append(
            f"gamma_2 = {decays.gamma_2:.6g} exceeds {GAMMA2_WARNING_RATIO} gamma_3; "
            f"weak-field closed forms assume |Omega_1|, |Omega_2| >> gamma_2")

    for warning in report.warnings:
        logger.warning(warning)
    return report


def ensure_valid(params: SystemParams) -> SystemParams:
    """Raise `InvalidParametersError` unless `validate` returns an empty report."""
    report = validate(params)
    if not report.ok:
        raise InvalidParametersError(report)
    return params


def is_finite_complex(value: complex) -> bool:
    return math.isfinite(value.real) and math.isfinite(value.imag)


__all__ = [
    "GAMMA2_WARNING_RATIO",
    "Violation",
    "ValidationReport",
    "validate",
    "ensure_valid",
    "is_finite_complex",
]
