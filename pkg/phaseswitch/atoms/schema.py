import enum
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from phaseswitch.model.schema import SystemParams


class SteadyCoherences(BaseModel):
    """
    First-order steady-state amplitudes with the atom prepared in |1⟩ (a₁ ≈ 1).

    Attributes:
        a2 (complex): Amplitude of the ground state |2⟩.
        a3 (complex): Amplitude of the excited state |3⟩.
        a4 (complex): Amplitude of the excited state |4⟩.
        p3 (float): P₃ = |a₃|².
        p4 (float): P₄ = |a₄|².
        lambda_det (complex): The determinant Λ of the linear system.
    """
    a2: complex
    a3: complex
    a4: complex
    p3: float = Field(ge=0.0)
    p4: float = Field(ge=0.0)
    lambda_det: complex


class InterferenceKind(enum.Enum):
    DESTRUCTIVE = 'destructive'
    CONSTRUCTIVE = 'constructive'
    INTERMEDIATE = 'intermediate'


class InterferenceCondition(BaseModel):
    kind: InterferenceKind
    residual: complex = Field(description="(Ω₁Ωc − Ω₂Ωp)/(|Ω₁Ωc| + |Ω₂Ωp|), 0 when both products vanish")


class DressedBasis(BaseModel):
    """
    Eigenvectors of the coupling-field interaction over the basis (|1⟩, |2⟩, |3⟩, |4⟩).

    Attributes:
        plus: |+⟩, shifted by +Ω.
        zero: |0⟩, unshifted, confined to the excited pair.
        minus: |−⟩, shifted by −Ω.
        shifts: (Ω, 0, −Ω).
    """
    plus: np.ndarray
    zero: np.ndarray
    minus: np.ndarray
    shifts: tuple[float, float, float]

    model_config = ConfigDict(arbitrary_types_allowed=True)

    def states(self) -> dict[str, tuple[float, np.ndarray]]:
        return {
            'plus': (self.shifts[0], self.plus),
            'zero': (self.shifts[1], self.zero),
            'minus': (self.shifts[2], self.minus),
        }

    def gram(self) -> np.ndarray:
        vectors = np.vstack([self.plus, self.zero, self.minus])
        return vectors.conj() @ vectors.T


class TransitionProbabilities(BaseModel):
    p_pm: float = Field(ge=0.0, description="Weak-field excitation strength of the |±⟩ doublet")
    p_0: float = Field(ge=0.0, description="Weak-field excitation strength of |0⟩")


class GroundDecay(enum.Enum):
    RELAXATION = 'relaxation'
    DEPHASING = 'dephasing'


class DecayChannel(BaseModel):
    """
    A Lindblad jump operator with its rate.

    Attributes:
        label (str): Short name such as '3->1'.
        rate (float): Rate multiplying the dissipator, in units of γ₃.
        operator (np.ndarray): 4×4 jump operator.
    """
    label: str
    rate: float = Field(ge=0.0)
    operator: np.ndarray

    model_config = ConfigDict(arbitrary_types_allowed=True)


class LindbladModel(BaseModel):
    params: SystemParams
    hamiltonian: np.ndarray
    channels: list[DecayChannel]
    branching_to_1: float = Field(ge=0.0, le=1.0)
    ground_decay: GroundDecay

    model_config = ConfigDict(arbitrary_types_allowed=True)


class DensityMatrix(BaseModel):
    """
    Steady state returned by the density-matrix solver.

    Attributes:
        rho (np.ndarray): 4×4 Hermitian matrix with unit trace.
        unique (bool): False when the steady state is not unique; rho is then one representative.
        null_space_dim (int): Dimension of the kernel of the Liouvillian.
        residual (float): ‖L(ρ)‖ in the Frobenius norm.
        condition (float): Condition estimate of the bordered linear system.
        warnings (list[str]): Diagnostics attached by the solver.
    """
    rho: np.ndarray
    unique: bool = True
    null_space_dim: int = 1
    residual: float = 0.0
    condition: float = 1.0
    warnings: list[str] = Field(default_factory=list)

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @property
    def populations(self) -> np.ndarray:
        return np.real(np.diag(self.rho))

    def element(self, row: int, column: int) -> complex:
        """Matrix element ρ_{row,column} with 1-based level labels."""
        return complex(self.rho[row - 1, column - 1])


class WeakFieldResponse(BaseModel):
    p3: float
    p4: float
    rho31: complex
    rho41: complex
    field_derivative: tuple[complex, complex] = Field(description="(iK₁₃ρ₃₁, iK₁₄ρ₄₁)")
    state: Optional[DensityMatrix] = None
    warnings: list[str] = Field(default_factory=list)


__all__ = [
    "SteadyCoherences",
    "InterferenceKind",
    "InterferenceCondition",
    "DressedBasis",
    "TransitionProbabilities",
    "GroundDecay",
    "DecayChannel",
    "LindbladModel",
    "DensityMatrix",
    "WeakFieldResponse",
]
