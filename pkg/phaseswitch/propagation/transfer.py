import cmath
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp

from phaseswitch.exceptions import UndefinedTransmissionError
from phaseswitch.model.schema import SystemParams
from phaseswitch.propagation.coupled_mode import coupled_mode_matrix
from phaseswitch.propagation.schema import CoupledModeMatrix, TransferResult


def transfer_matrix(cm: CoupledModeMatrix, fraction: float = 1.0) -> np.ndarray:
    """
    exp(fraction·M) for the coupled-mode generator M.

    Uses exp(A) = e^μ[cosh(s)·I + sinh(s)/s·(A − μI)] with μ = tr(A)/2 and s² = ((a − d)/2)² + bc,
    taking sinh(s)/s = 1 at s = 0.

    Args:
        cm (CoupledModeMatrix): The generator over the full medium.
        fraction (float): Length travelled, as a fraction of ℓ.

    Returns:
        np.ndarray: The 2×2 transfer matrix.
    """
    a = fraction * cm.m
    mu = 0.5 * (a[0, 0] + a[1, 1])
    s = cmath.sqrt(0.25 * (a[0, 0] - a[1, 1]) ** 2 + a[0, 1] * a[1, 0])
    shifted = a - mu * np.eye(2)
    exp_mu = cmath.exp(mu)
    cosh = exp_mu * cmath.cosh(s)
    sinhc = exp_mu * (cmath.sinh(s) / s if s != 0 else 1.0)
    return cosh * np.eye(2, dtype=complex) + sinhc * shifted


def input_vector(params: SystemParams, input: Optional[tuple[complex, complex]]) -> np.ndarray:
    vector = np.array(params.fields.weak_input if input is None else input, dtype=complex)
    if not np.any(vector):
        raise UndefinedTransmissionError("Transmission is undefined: both input fields are zero")
    return vector


def transfer_result(t: np.ndarray, vector: np.ndarray) -> TransferResult:
    output = t @ vector
    t_probe = complex(output[0] / vector[0]) if vector[0] != 0 else None
    t_control = complex(output[1] / vector[1]) if vector[1] != 0 else None
    return TransferResult(
        t=t,
        output=output,
        t_probe=t_probe,
        t_control=t_control,
        transmission_p=abs(t_probe) ** 2 if t_probe is not None else None,
        transmission_c=abs(t_control) ** 2 if t_control is not None else None,
        transmission_total=float(np.sum(np.abs(output) ** 2) / np.sum(np.abs(vector) ** 2)),
    )


def transfer(params: SystemParams, input: Optional[tuple[complex, complex]] = None) -> TransferResult:
    """
    Propagate the weak fields through the medium.

    Args:
        params (SystemParams): Admissible parameters; the medium enters only through K·ℓ.
        input (tuple, optional): (Ωp(0), Ωc(0)); defaults to the weak fields in `params`.

    Returns:
        TransferResult: Transfer matrix, output fields and transmissions.

    Raises:
        UndefinedTransmissionError: If both input components are zero.
        SingularityError: If the steady-state determinant vanishes.
    """
    vector = input_vector(params, input)
    return transfer_result(transfer_matrix(coupled_mode_matrix(params)), vector)


def integrate_transfer(params: SystemParams,
                       input: Optional[tuple[complex, complex]] = None,
                       rtol: float = 1e-12,
                       atol: float = 1e-14) -> np.ndarray:
    """
    Output fields from adaptive integration of dΩ/dz = MΩ over z ∈ [0, 1].

    An independent check of `transfer`, using an explicit Runge-Kutta method of order 8.
    """
    vector = input_vector(params, input)
    m = coupled_mode_matrix(params).m
    solution = solve_ivp(lambda z, y: m @ y, (0.0, 1.0), vector, method='DOP853', rtol=rtol, atol=atol)
    if not solution.success:
        raise RuntimeError(f"Propagation ODE failed: {solution.message}")
    return solution.y[:, -1]


__all__ = [
    "input_vector",
    "transfer_result",
    "transfer_matrix",
    "transfer",
    "integrate_transfer",
]
