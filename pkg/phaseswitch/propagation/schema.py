from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class CoupledModeMatrix(BaseModel):
    """
    Generator M of d(Ωp, Ωc)/dz over the whole medium (z in units of ℓ).

    Attributes:
        m (np.ndarray): 2×2 complex matrix.
        eigenvalues (tuple): (λ₁, λ₂), λ₁ the root of larger magnitude.
        eigenvectors (tuple): Unit eigenvectors with their first nonzero component real positive.
        lambda_det (complex): Determinant Λ of the underlying steady-state system.
    """
    m: np.ndarray
    eigenvalues: tuple[complex, complex]
    eigenvectors: tuple[np.ndarray, np.ndarray]
    lambda_det: complex

    model_config = ConfigDict(arbitrary_types_allowed=True)


class TransferResult(BaseModel):
    """
    Fields leaving the medium for a given input.

    Attributes:
        t (np.ndarray): 2×2 transfer matrix mapping (Ωp(0), Ωc(0)) to (Ωp(ℓ), Ωc(ℓ)).
        output (np.ndarray): (Ωp(ℓ), Ωc(ℓ)).
        t_probe (complex, optional): Ωp(ℓ)/Ωp(0), None without probe input.
        t_control (complex, optional): Ωc(ℓ)/Ωc(0), None without control input.
        transmission_p (float, optional): |t_probe|².
        transmission_c (float, optional): |t_control|².
        transmission_total (float): (|Ωp(ℓ)|² + |Ωc(ℓ)|²)/(|Ωp(0)|² + |Ωc(0)|²).
    """
    t: np.ndarray
    output: np.ndarray
    t_probe: Optional[complex] = None
    t_control: Optional[complex] = None
    transmission_p: Optional[float] = Field(default=None, ge=0.0)
    transmission_c: Optional[float] = Field(default=None, ge=0.0)
    transmission_total: float = Field(ge=0.0)

    model_config = ConfigDict(arbitrary_types_allowed=True)


class GroupDelayResult(BaseModel):
    tau_p: Optional[float] = Field(default=None, description="Probe group delay in units of 1/gamma_3")
    tau_c: Optional[float] = Field(default=None, description="Control group delay in units of 1/gamma_3")
    vg_formula_p: float = Field(description="gamma_4 K13 l / (gamma_3 |Omega_2|^2 + gamma_4 |Omega_1|^2)")
    vg_formula_c: float = Field(description="r gamma_3 K14 l / (gamma_3 |Omega_2|^2 + gamma_4 |Omega_1|^2)")
    matched: bool


__all__ = [
    "CoupledModeMatrix",
    "TransferResult",
    "GroupDelayResult",
]
