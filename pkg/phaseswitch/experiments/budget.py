from phaseswitch.exceptions import DomainError
from phaseswitch.experiments.schema import PhotonBudget
from phaseswitch.model.schema import ComplexRabi


def photon_budget(omega_1: ComplexRabi, omega_2: ComplexRabi, g_p: float, g_c: float, n_p: float) -> PhotonBudget:
    """
    Control photon number that cancels the probe excitation path.

    Destructive interference Ω₁Ωc = Ω₂Ωp with Ωp = g_p√n_p and Ωc = g_c√n_c gives
    n_c = |Ω₂g_p/(Ω₁g_c)|²·n_p = α·n_p.

    Args:
        omega_1 (ComplexRabi): Coupling field 1.
        omega_2 (ComplexRabi): Coupling field 2.
        g_p (float): Probe coupling coefficient.
        g_c (float): Control coupling coefficient.
        n_p (float): Mean probe photon number.

    Raises:
        DomainError: If Ω₁ or g_c is zero, or n_p is negative.
    """
    if omega_1.amplitude <= 0:
        raise DomainError("Photon budget needs a nonzero coupling field 1")
    if g_c <= 0:
        raise DomainError(f"Control coupling coefficient must be positive, got {g_c}")
    if n_p < 0:
        raise DomainError(f"Probe photon number must be non-negative, got {n_p}")
    alpha = abs(omega_2.value * g_p / (omega_1.value * g_c)) ** 2
    return PhotonBudget(g_p=g_p, g_c=g_c, n_p=n_p, alpha=alpha, n_c=alpha * n_p)


__all__ = [
    "photon_budget",
]
