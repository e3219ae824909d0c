"""
Closed-form weak-field steady state of the double-Λ atom.

With the atom in |1⟩ and the probe/control fields weak, the amplitudes of |2⟩, |3⟩ and |4⟩
solve a 3×3 linear system whose determinant is Λ = δ₁δcδp − δp|Ω₂|² − δc|Ω₁|².
"""
from typing import Optional

from phaseswitch.atoms.schema import InterferenceCondition, InterferenceKind, SteadyCoherences
from phaseswitch.exceptions import DomainError, SingularityError
from phaseswitch.model.schema import FieldSet, SystemParams
from phaseswitch.model.validation import ensure_valid

LAMBDA_THRESHOLD = 1e-30
INTERFERENCE_TOLERANCE = 1e-9


def complex_detunings(params: SystemParams) -> tuple[complex, complex, complex]:
    """
    Complex detunings (δp, δ₁, δc) of the one-photon, two-photon and control transitions.

    Returns:
        tuple: δp = Δp + iγ₃, δ₁ = Δp − Δ₁ + iγ₂, δc = Δc + iγ₄.
    """
    d = params.detunings
    g = params.decays
    return (
        complex(d.delta_p, g.gamma_3),
        complex(d.delta_p - d.delta_1, g.gamma_2),
        complex(d.delta_c, g.gamma_4),
    )


def _scan_point(params: SystemParams) -> dict:
    d = params.detunings
    return {
        'delta_p': d.delta_p,
        'delta_1': d.delta_1,
        'delta_c': d.delta_c,
        'delta_2': d.delta_2,
        'omega_1': params.fields.omega_1.amplitude,
        'omega_2': params.fields.omega_2.amplitude,
    }


def lambda_determinant(params: SystemParams) -> complex:
    """Λ = δ₁δcδp − δp|Ω₂|² − δc|Ω₁|²; raises `SingularityError` when |Λ| ≤ 10⁻³⁰."""
    dp, d1, dc = complex_detunings(params)
    w1 = params.fields.omega_1.amplitude ** 2
    w2 = params.fields.omega_2.amplitude ** 2
    lam = d1 * dc * dp - dp * w2 - dc * w1
    if not abs(lam) > LAMBDA_THRESHOLD:
        raise SingularityError("Steady-state determinant vanishes", _scan_point(params))
    return lam


def solve_amplitudes(params: SystemParams,
                     omega_p: Optional[complex] = None,
                     omega_c: Optional[complex] = None) -> SteadyCoherences:
    """
    Evaluate the amplitudes for arbitrary weak fields without re-validating `params`.

    Args:
        params (SystemParams): Admissible parameters.
        omega_p (complex, optional): Probe value, defaults to the one in `params`.
        omega_c (complex, optional): Control value, defaults to the one in `params`.
    """
    f = params.fields
    omega_p = f.omega_p.value if omega_p is None else complex(omega_p)
    omega_c = f.omega_c.value if omega_c is None else complex(omega_c)
    omega_1 = f.omega_1.value
    omega_2 = f.omega_2.value
    dp, d1, dc = complex_detunings(params)
    lam = lambda_determinant(params)

    a2 = (omega_1.conjugate() * omega_p * dc + omega_2.conjugate() * omega_c * dp) / lam
    a3 = -(omega_p * (d1 * dc - abs(omega_2) ** 2) + omega_1 * omega_2.conjugate() * omega_c) / lam
    a4 = -(omega_c * (d1 * dp - abs(omega_1) ** 2) + omega_2 * omega_1.conjugate() * omega_p) / lam
    return SteadyCoherences(
        a2=a2, a3=a3, a4=a4,
        p3=abs(a3) ** 2, p4=abs(a4) ** 2,
        lambda_det=lam,
    )


def steady_coherences(params: SystemParams) -> SteadyCoherences:
    """
    Steady-state weak-field amplitudes a₂, a₃, a₄ and excited populations P₃, P₄.

    At Δp = Δ₁ = Δc = Δ₂ = 0 the populations reduce to `adiabatic_populations`.

    Raises:
        InvalidParametersError: If `params` fails validation, closure included.
        SingularityError: If |Λ| ≤ 10⁻³⁰.
    """
    ensure_valid(params)
    return solve_amplitudes(params)


def adiabatic_populations(params: SystemParams) -> tuple[float, float]:
    """
    Resonant excited-state populations in their closed form.

    P₃ = |Ωp(|Ω₂|² + γ₂γ₄) − Ω₁Ω₂*Ωc|² / D², P₄ = |Ωc(|Ω₁|² + γ₂γ₃) − Ω₂Ω₁*Ωp|² / D²,
    with D = γ₂γ₃γ₄ + γ₃|Ω₂|² + γ₄|Ω₁|². Detunings are ignored.
    """
    f = params.fields
    g = params.decays
    omega_p, omega_c = f.weak_input
    omega_1, omega_2 = f.omega_1.value, f.omega_2.value
    w1, w2 = abs(omega_1) ** 2, abs(omega_2) ** 2
    denominator = g.gamma_2 * g.gamma_3 * g.gamma_4 + g.gamma_3 * w2 + g.gamma_4 * w1
    if denominator <= 0:
        raise SingularityError("Resonant denominator vanishes", _scan_point(params))
    p3 = abs(omega_p * (w2 + g.gamma_2 * g.gamma_4) - omega_1 * omega_2.conjugate() * omega_c) ** 2
    p4 = abs(omega_c * (w1 + g.gamma_2 * g.gamma_3) - omega_2 * omega_1.conjugate() * omega_p) ** 2
    return p3 / denominator ** 2, p4 / denominator ** 2


def interference_condition(fields: FieldSet) -> InterferenceCondition:
    """
    Classify the interference of the one-photon and three-photon excitation paths.

    Destructive when Ω₁Ωc = Ω₂Ωp, constructive when Ω₁Ωc = −Ω₂Ωp, both within 10⁻⁹ relative.
    Without any weak field the result is intermediate with zero residual.

    Raises:
        DomainError: If either coupling amplitude is zero.
    """
    if fields.omega_1.amplitude <= 0 or fields.omega_2.amplitude <= 0:
        raise DomainError("Interference condition needs both coupling fields")
    one_photon = fields.omega_2.value * fields.omega_p.value
    three_photon = fields.omega_1.value * fields.omega_c.value
    scale = abs(three_photon) + abs(one_photon)
    if scale == 0:
        return InterferenceCondition(kind=InterferenceKind.INTERMEDIATE, residual=0j)
    residual = (three_photon - one_photon) / scale
    if abs(residual) < INTERFERENCE_TOLERANCE:
        kind = InterferenceKind.DESTRUCTIVE
    elif abs(three_photon + one_photon) < INTERFERENCE_TOLERANCE * scale:
        kind = InterferenceKind.CONSTRUCTIVE
    else:
        kind = InterferenceKind.INTERMEDIATE
    return InterferenceCondition(kind=kind, residual=residual)


def scattering_rate(params: SystemParams, coherences: SteadyCoherences) -> float:
    return 2.0 * params.decays.gamma_3 * coherences.p3 + 2.0 * params.decays.gamma_4 * coherences.p4


def fluorescence_density(params: SystemParams) -> float:
    """
    Spontaneous scattering rate 2γ₃P₃ + 2γ₄P₄ per atom, in arbitrary units.
    """
    return scattering_rate(params, steady_coherences(params))


__all__ = [
    "LAMBDA_THRESHOLD",
    "complex_detunings",
    "lambda_determinant",
    "solve_amplitudes",
    "steady_coherences",
    "adiabatic_populations",
    "interference_condition",
    "scattering_rate",
    "fluorescence_density",
]
