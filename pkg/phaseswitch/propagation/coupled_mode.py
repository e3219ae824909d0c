import cmath

import numpy as np

from phaseswitch.atoms.coherences import complex_detunings, lambda_determinant
from phaseswitch.model.schema import SystemParams
from phaseswitch.model.validation import ensure_valid
from phaseswitch.propagation.schema import CoupledModeMatrix


def _canonical(vector: np.ndarray) -> np.ndarray:
    vector = vector / np.linalg.norm(vector)
    for component in vector:
        if abs(component) > 0:
            return vector * (abs(component) / component)
    return vector


def _eigenvector(m: np.ndarray, eigenvalue: complex, fallback: np.ndarray) -> np.ndarray:
    (a, b), (c, d) = m
    candidates = [np.array([b, eigenvalue - a]), np.array([eigenvalue - d, c])]
    best = max(candidates, key=np.linalg.norm)
    if np.linalg.norm(best) == 0:
        best = fallback
    return _canonical(best.astype(complex))


def eig2x2(m: np.ndarray) -> tuple[tuple[complex, complex], tuple[np.ndarray, np.ndarray]]:
    """
    Closed-form eigen-decomposition of a 2×2 complex matrix.

    The roots of λ² − tr·λ + det are taken as q = μ ± s with the sign that avoids cancellation
    (μ = tr/2, s = √(((a − d)/2)² + bc)), and the second root as det/q.

    Returns:
        tuple: ((λ₁, λ₂), (v₁, v₂)) with unit eigenvectors in canonical gauge.
    """
    (a, b), (c, d) = np.asarray(m, dtype=complex)
    mu = 0.5 * (a + d)
    s = cmath.sqrt(0.25 * (a - d) ** 2 + b * c)
    det = a * d - b * c
    q = mu + s if abs(mu + s) >= abs(mu - s) else mu - s
    if q == 0:
        first, second = 0j, 0j
    else:
        first, second = complex(q), complex(det / q)
    m = np.array([[a, b], [c, d]])
    return (first, second), (
        _eigenvector(m, first, np.array([1.0, 0.0])),
        _eigenvector(m, second, np.array([0.0, 1.0])),
    )


def coupled_mode_matrix(params: SystemParams) -> CoupledModeMatrix:
    """
    Generator of the weak-field propagation equations d(Ωp, Ωc)/dz = M (Ωp, Ωc).

    M₁₁ = iK₁₃(|Ω₂|² − δ₁δc)/Λ, M₁₂ = −iK₁₃Ω₁Ω₂*/Λ, M₂₁ = −iK₁₄Ω₁*Ω₂/Λ and
    M₂₂ = iK₁₄(|Ω₁|² − δ₁δp)/Λ, with K·ℓ taken from the medium so that z runs over [0, 1].
    Without cross coupling the off-diagonal terms are dropped.

    Raises:
        InvalidParametersError: If `params` is not admissible.
        SingularityError: If |Λ| ≤ 10⁻³⁰.
    """
    ensure_valid(params)
    f = params.fields
    omega_1, omega_2 = f.omega_1.value, f.omega_2.value
    dp, d1, dc = complex_detunings(params)
    lam = lambda_determinant(params)
    k13 = params.medium.k13_ell
    k14 = params.medium.k14_ell

    m = np.empty((2, 2), dtype=complex)
    m[0, 0] = 1j * k13 * (abs(omega_2) ** 2 - d1 * dc) / lam
    m[1, 1] = 1j * k14 * (abs(omega_1) ** 2 - d1 * dp) / lam
    if params.medium.cross_coupling:
        m[0, 1] = -1j * k13 * omega_1 * omega_2.conjugate() / lam
        m[1, 0] = -1j * k14 * omega_1.conjugate() * omega_2 / lam
    else:
        m[0, 1] = m[1, 0] = 0j
    eigenvalues, eigenvectors = eig2x2(m)
    return CoupledModeMatrix(m=m, eigenvalues=eigenvalues, eigenvectors=eigenvectors, lambda_det=lam)


__all__ = [
    "eig2x2",
    "coupled_mode_matrix",
]
