import math

import numpy as np

from phaseswitch.atoms.schema import DressedBasis, TransitionProbabilities
from phaseswitch.exceptions import DegenerateBasisError
from phaseswitch.model.phase import interference_phase
from phaseswitch.model.schema import ComplexRabi, FieldSet

_SQRT_HALF = 1.0 / math.sqrt(2.0)


def dressed_basis(omega_1: ComplexRabi, omega_2: ComplexRabi) -> DressedBasis:
    """
    Dressed states of |2⟩, |3⟩, |4⟩ under the two coupling fields.

    |±⟩ = (|2⟩ ∓ (Ω₁/Ω)|3⟩ ∓ (Ω₂/Ω)|4⟩)/√2 are shifted by ±Ω and |0⟩ = (Ω₂*|3⟩ − Ω₁*|4⟩)/Ω stays
    unshifted, where Ω = √(|Ω₁|² + |Ω₂|²). The ground state |1⟩ is not part of the manifold.

    Args:
        omega_1 (ComplexRabi): Coupling on |2⟩-|3⟩.
        omega_2 (ComplexRabi): Coupling on |2⟩-|4⟩.

    Returns:
        DressedBasis: The three orthonormal states and their shifts (Ω, 0, −Ω).

    Raises:
        DegenerateBasisError: If both couplings vanish.
    """
    omega = math.hypot(omega_1.amplitude, omega_2.amplitude)
    if omega <= 0:
        raise DegenerateBasisError("Dressed basis needs at least one nonzero coupling field")
    u1 = omega_1.value / omega
    u2 = omega_2.value / omega
    plus = _SQRT_HALF * np.array([0.0, 1.0, -u1, -u2], dtype=complex)
    minus = _SQRT_HALF * np.array([0.0, 1.0, u1, u2], dtype=complex)
    zero = np.array([0.0, 0.0, u2.conjugate(), -u1.conjugate()], dtype=complex)
    return DressedBasis(plus=plus, zero=zero, minus=minus, shifts=(omega, 0.0, -omega))


def coupling_hamiltonian(fields: FieldSet) -> np.ndarray:
    """Interaction of the coupling fields alone, −(Ω₁|3⟩⟨2| + Ω₂|4⟩⟨2| + h.c.)."""
    h = np.zeros((4, 4), dtype=complex)
    h[2, 1] = -fields.omega_1.value
    h[3, 1] = -fields.omega_2.value
    return h + h.conj().T


def weak_excitation(fields: FieldSet) -> np.ndarray:
    """The state V|1⟩ = −(Ωp|3⟩ + Ωc|4⟩) reached by one weak-field interaction."""
    return -np.array([0.0, 0.0, fields.omega_p.value, fields.omega_c.value], dtype=complex)


def matrix_elements(basis: DressedBasis, fields: FieldSet) -> dict[str, complex]:
    """Transition amplitudes ⟨d|V|1⟩ into each dressed state d."""
    excitation = weak_excitation(fields)
    return {name: complex(np.vdot(vector, excitation)) for name, (_, vector) in basis.states().items()}


def transition_probabilities(fields: FieldSet) -> TransitionProbabilities:
    """
    Weak-field transition strengths from |1⟩ into the dressed doublet and into |0⟩.

    p_pm = |Ω₁*Ωp + Ω₂*Ωc|² and p_0 = |Ω₂Ωp − Ω₁Ωc|², so that
    p_pm + p_0 = (|Ωp|² + |Ωc|²)(|Ω₁|² + |Ω₂|²) for any complex fields.
    """
    omega_p, omega_c = fields.weak_input
    omega_1, omega_2 = fields.omega_1.value, fields.omega_2.value
    p_pm = abs(omega_1.conjugate() * omega_p + omega_2.conjugate() * omega_c) ** 2
    p_0 = abs(omega_2 * omega_p - omega_1 * omega_c) ** 2
    return TransitionProbabilities(p_pm=p_pm, p_0=p_0)


def expanded_probabilities(fields: FieldSet) -> TransitionProbabilities:
    """
    The same strengths written with amplitudes and the interference phase θ = φp − φ₁ + φ₂ − φc:
    |Ωp|²|Ω₁|² + |Ωc|²|Ω₂|² ± 2|ΩpΩcΩ₁Ω₂|cos θ, with + for the doublet and − for |0⟩.
    """
    ap, ac = fields.omega_p.amplitude, fields.omega_c.amplitude
    a1, a2 = fields.omega_1.amplitude, fields.omega_2.amplitude
    product = ap * ac * a1 * a2
    cross = 2.0 * product * math.cos(interference_phase(fields)) if product > 0 else 0.0
    p_pm = (ap * a1) ** 2 + (ac * a2) ** 2 + cross
    p_0 = (ap * a2) ** 2 + (ac * a1) ** 2 - cross
    return TransitionProbabilities(p_pm=max(p_pm, 0.0), p_0=max(p_0, 0.0))


__all__ = [
    "dressed_basis",
    "coupling_hamiltonian",
    "weak_excitation",
    "matrix_elements",
    "transition_probabilities",
    "expanded_probabilities",
]
