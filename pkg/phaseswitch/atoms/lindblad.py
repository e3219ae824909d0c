"""
Independent density-matrix steady state of the four-level atom.

The master equation dρ/dt = −i[H, ρ] + Σ rate·(CρC† − ½{C†C, ρ}) is written as a real 16×16
generator acting on the coordinates of ρ in an orthonormal basis of Hermitian matrices, and its
kernel is found by a direct solve with the trace row substituted for one population row.
"""
import math

import numpy as np
import scipy.linalg

from phaseswitch.atoms.schema import (DecayChannel, DensityMatrix, GroundDecay, LindbladModel,
                                      WeakFieldResponse)
from phaseswitch.exceptions import ClosureError
from phaseswitch.logger import logger, logit
from phaseswitch.model.schema import SystemParams
from phaseswitch.model.validation import ensure_valid

LEVELS = 4
NULL_SPACE_RTOL = 1e-10
CONDITION_LIMIT = 1e12
WEAK_FIELD_LIMIT = 1e-2


def _projector(row: int, column: int) -> np.ndarray:
    op = np.zeros((LEVELS, LEVELS), dtype=complex)
    op[row, column] = 1.0
    return op


def hermitian_basis() -> tuple[np.ndarray, np.ndarray]:
    """
    Orthonormal Hermitian basis of 4×4 matrices under ⟨A, B⟩ = Tr(A†B).

    Returns:
        tuple: The (16, 4, 4) stack E_ii, (E_ij + E_ji)/√2, −i(E_ij − E_ji)/√2 for i < j, and the
        indices of the diagonal elements within it.
    """
    basis = []
    diagonal = []
    for i in range(LEVELS):
        diagonal.append(len(basis))
        basis.append(_projector(i, i))
    for i in range(LEVELS):
        for j in range(i + 1, LEVELS):
            basis.append((_projector(i, j) + _projector(j, i)) / math.sqrt(2.0))
            basis.append(-1j * (_projector(i, j) - _projector(j, i)) / math.sqrt(2.0))
    return np.array(basis), np.array(diagonal)


_BASIS, _DIAGONAL = hermitian_basis()


def hamiltonian(params: SystemParams) -> np.ndarray:
    """
    Rotating-frame Hamiltonian with ħ = 1 over (|1⟩, |2⟩, |3⟩, |4⟩).

    H = −diag(0, Δp − Δ₁, Δp, Δc) − (Ωp|3⟩⟨1| + Ω₁|3⟩⟨2| + Ωc|4⟩⟨1| + Ω₂|4⟩⟨2| + h.c.)
    """
    d = params.detunings
    f = params.fields
    h = np.zeros((LEVELS, LEVELS), dtype=complex)
    h[2, 0] = -f.omega_p.value
    h[2, 1] = -f.omega_1.value
    h[3, 0] = -f.omega_c.value
    h[3, 1] = -f.omega_2.value
    h = h + h.conj().T
    h -= np.diag([0.0, d.delta_p - d.delta_1, d.delta_p, d.delta_c])
    return h


def decay_channels(params: SystemParams,
                   branching_to_1: float = 1.0,
                   ground_decay: GroundDecay = GroundDecay.RELAXATION) -> list[DecayChannel]:
    g = params.decays
    channels = [
        DecayChannel(label='3->1', rate=2.0 * g.gamma_3 * branching_to_1, operator=_projector(0, 2)),
        DecayChannel(label='3->2', rate=2.0 * g.gamma_3 * (1.0 - branching_to_1), operator=_projector(1, 2)),
        DecayChannel(label='4->1', rate=2.0 * g.gamma_4 * branching_to_1, operator=_projector(0, 3)),
        DecayChannel(label='4->2', rate=2.0 * g.gamma_4 * (1.0 - branching_to_1), operator=_projector(1, 3)),
    ]
    if ground_decay is GroundDecay.RELAXATION:
        channels.append(DecayChannel(label='2->1', rate=2.0 * g.gamma_2, operator=_projector(0, 1)))
    else:
        channels.append(DecayChannel(label='2-dephasing', rate=2.0 * g.gamma_2, operator=_projector(1, 1)))
    return [channel for channel in channels if channel.rate > 0]


def build_model(params: SystemParams,
                branching_to_1: float = 1.0,
                ground_decay: GroundDecay | str = GroundDecay.RELAXATION) -> LindbladModel:
    """
    Assemble the Hamiltonian and decay channels of the master equation.

    Each excited level i ∈ {3, 4} loses population at 2γᵢ; the fraction `branching_to_1` of it
    returns to |1⟩, the rest to |2⟩. The ground coherence decays at γ₂, through |2⟩ → |1⟩
    relaxation at 2γ₂ or through pure dephasing of |2⟩ at 2γ₂.
    With the default channels every jump returns the atom to |1⟩ and the weak-field populations
    match the closed form. Other channel choices accumulate population in |2⟩, where the coupling
    fields re-excite it: the optical coherences still match, the excited populations do not.

    Args:
        params (SystemParams): Parameters; multiphoton closure must hold.
        branching_to_1 (float): Fraction of excited-state decay returning to |1⟩.
        ground_decay (GroundDecay | str): 'relaxation' or 'dephasing'.

    Returns:
        LindbladModel: The assembled model.

    Raises:
        ClosureError: If Δp − Δ₁ ≠ Δc − Δ₂.
    """
    if not params.detunings.is_closed:
        raise ClosureError(
            f"No time-independent frame exists: closure residual {params.detunings.closure_residual:.6g}")
    ensure_valid(params)
    if not 0.0 <= branching_to_1 <= 1.0:
        raise ValueError(f"branching_to_1 must lie in [0, 1], got {branching_to_1}")
    ground_decay = GroundDecay(ground_decay) if isinstance(ground_decay, str) else ground_decay
    return LindbladModel(
        params=params,
        hamiltonian=hamiltonian(params),
        channels=decay_channels(params, branching_to_1, ground_decay),
        branching_to_1=branching_to_1,
        ground_decay=ground_decay,
    )


def apply_liouvillian(model: LindbladModel, rho: np.ndarray) -> np.ndarray:
    """Evaluate L(ρ) for a 4×4 matrix ρ."""
    h = model.hamiltonian
    result = -1j * (h @ rho - rho @ h)
    for channel in model.channels:
        c = channel.operator
        c_dag = c.conj().T
        c_sq = c_dag @ c
        result += channel.rate * (c @ rho @ c_dag - 0.5 * (c_sq @ rho + rho @ c_sq))
    return result


def liouvillian(model: LindbladModel) -> np.ndarray:
    """Real 16×16 generator A with A[j, k] = Tr(B_j L(B_k)) in the Hermitian basis B."""
    images = np.array([apply_liouvillian(model, b) for b in _BASIS])
    return np.real(np.einsum('jab,kba->jk', _BASIS, images))


def to_coordinates(rho: np.ndarray) -> np.ndarray:
    return np.real(np.einsum('kab,ba->k', _BASIS, rho))


def from_coordinates(x: np.ndarray) -> np.ndarray:
    return np.einsum('k,kab->ab', x, _BASIS)


@logit()
def steady_state(model: LindbladModel) -> DensityMatrix:
    """
    Trace-one steady state of the master equation.

    Returns:
        DensityMatrix: The solution with its residual ‖L(ρ)‖. When the kernel has dimension > 1
        the result is flagged non-unique and holds the least-squares representative.
    """
    generator = liouvillian(model)
    singular_values = scipy.linalg.svdvals(generator)
    null_space_dim = int(np.sum(singular_values < NULL_SPACE_RTOL * singular_values[0])) \
        if singular_values[0] > 0 else generator.shape[0]

    trace_row = np.zeros(generator.shape[0])
    trace_row[_DIAGONAL] = 1.0
    bordered = generator.copy()
    bordered[_DIAGONAL[0]] = trace_row
    rhs = np.zeros(generator.shape[0])
    rhs[_DIAGONAL[0]] = 1.0

    warnings = []
    bordered_values = scipy.linalg.svdvals(bordered)
    condition = bordered_values[0] / bordered_values[-1] if bordered_values[-1] > 0 else math.inf

    unique = null_space_dim <= 1
    if unique:
        x = scipy.linalg.solve(bordered, rhs)
    else:
        stacked = np.vstack([generator, trace_row])
        x = scipy.linalg.lstsq(stacked, np.concatenate([np.zeros(generator.shape[0]), [1.0]]))[0]
        warnings.append(f"Steady state is not unique: kernel dimension {null_space_dim}")
    if unique and condition > CONDITION_LIMIT:
        warnings.append(f"Ill-conditioned Liouvillian: condition estimate {condition:.3g}")
    for warning in warnings:
        logger.warning(warning)

    rho = from_coordinates(x)
    residual = float(np.linalg.norm(generator @ x))
    return DensityMatrix(
        rho=rho,
        unique=unique,
        null_space_dim=null_space_dim,
        residual=residual,
        condition=condition,
        warnings=warnings,
    )


def weak_field_response(params: SystemParams,
                        branching_to_1: float = 1.0,
                        ground_decay: GroundDecay | str = GroundDecay.RELAXATION) -> WeakFieldResponse:
    """
    Excited populations and optical coherences of the full steady state.

    The field derivative (iK₁₃ρ₃₁, iK₁₄ρ₄₁) is the right-hand side of the propagation
    equations and matches the coupled-mode matrix applied to (Ωp, Ωc) at weak drive.
    """
    warnings = []
    omega_p, omega_c = params.fields.weak_input
    if max(abs(omega_p), abs(omega_c)) > WEAK_FIELD_LIMIT:
        warnings.append(
            f"Weak fields exceed {WEAK_FIELD_LIMIT} gamma_3; the linear-response comparison is approximate")
        logger.warning(warnings[-1])
    state = steady_state(build_model(params, branching_to_1, ground_decay))
    rho31 = state.element(3, 1)
    rho41 = state.element(4, 1)
    medium = params.medium
    return WeakFieldResponse(
        p3=float(state.populations[2]),
        p4=float(state.populations[3]),
        rho31=rho31,
        rho41=rho41,
        field_derivative=(1j * medium.k13_ell * rho31, 1j * medium.k14_ell * rho41),
        state=state,
        warnings=warnings + state.warnings,
    )


__all__ = [
    "hermitian_basis",
    "hamiltonian",
    "decay_channels",
    "build_model",
    "apply_liouvillian",
    "liouvillian",
    "to_coordinates",
    "from_coordinates",
    "steady_state",
    "weak_field_response",
]
