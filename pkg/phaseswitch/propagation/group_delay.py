import cmath
import math
from typing import Optional

from phaseswitch.exceptions import StepTooLargeError
from phaseswitch.model.schema import SystemParams
from phaseswitch.propagation.coupled_mode import coupled_mode_matrix
from phaseswitch.propagation.schema import GroupDelayResult
from phaseswitch.propagation.transfer import input_vector, transfer_matrix, transfer_result

DEFAULT_STEP = 1e-4
MATCH_TOLERANCE = 1e-6


def _delay(t_minus: Optional[complex], t_plus: Optional[complex], step: float, name: str) -> Optional[float]:
    if t_minus is None or t_plus is None:
        return None
    if t_minus == 0 or t_plus == 0:
        raise StepTooLargeError(f"{name} transfer vanishes next to the operating point")
    jump = cmath.phase(t_plus / t_minus)
    if abs(jump) > 0.5 * math.pi:
        raise StepTooLargeError(
            f"{name} transfer phase jumps by {jump:.3g} rad across 2*step = {2 * step:.3g}; reduce the step")
    return jump / (2.0 * step)


def velocity_formulas(params: SystemParams) -> tuple[float, float, bool]:
    """
    Closed-form group-velocity combinations and the matching predicate.

    Returns:
        tuple: (γ₄K₁₃ℓ/D, rγ₃K₁₄ℓ/D, matched) with D = γ₃|Ω₂|² + γ₄|Ω₁|² and r = ω_c/ω_p.
        The velocities match when |γ₄K₁₃ − rγ₃K₁₄| < 10⁻⁶·(γ₄K₁₃ + rγ₃K₁₄).
    """
    g = params.decays
    medium = params.medium
    f = params.fields
    denominator = g.gamma_3 * f.omega_2.amplitude ** 2 + g.gamma_4 * f.omega_1.amplitude ** 2
    probe = g.gamma_4 * medium.k13_ell
    control = medium.omega_ratio * g.gamma_3 * medium.k14_ell
    if denominator > 0:
        vg_p, vg_c = probe / denominator, control / denominator
    else:
        vg_p, vg_c = math.inf, math.inf
    total = probe + control
    matched = True if total == 0 else abs(probe - control) < MATCH_TOLERANCE * total
    return vg_p, vg_c, matched


def group_delay(params: SystemParams,
                input: Optional[tuple[complex, complex]] = None,
                step: float = DEFAULT_STEP) -> GroupDelayResult:
    """
    Group delays d(arg t)/dΔ of probe and control at the operating point Δ = Δp.

    The derivative is a central difference over Δ ± step with both weak lasers scanned together.

    Raises:
        StepTooLargeError: If the transfer phase changes by more than π/2 between the neighbours.
    """
    if not step > 0:
        raise ValueError(f"Finite-difference step must be positive, got {step}")
    vector = input_vector(params, input)
    delta = params.detunings.delta_p
    minus = transfer_result(transfer_matrix(coupled_mode_matrix(params.at_scan_point(delta - step))), vector)
    plus = transfer_result(transfer_matrix(coupled_mode_matrix(params.at_scan_point(delta + step))), vector)
    vg_p, vg_c, matched = velocity_formulas(params)
    return GroupDelayResult(
        tau_p=_delay(minus.t_probe, plus.t_probe, step, 'Probe'),
        tau_c=_delay(minus.t_control, plus.t_control, step, 'Control'),
        vg_formula_p=vg_p,
        vg_formula_c=vg_c,
        matched=matched,
    )


__all__ = [
    "DEFAULT_STEP",
    "velocity_formulas",
    "group_delay",
]
