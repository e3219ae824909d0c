import cmath
import math
from typing import Optional

import numpy as np

from phaseswitch.model.schema import ComplexRabi, Decays, Detunings, FieldSet, Medium, SystemParams


def make_params(omega_p: complex = 0.05, omega_c: complex = 0.0, omega_1: complex = 1.0, omega_2: complex = 1.0,
                delta_p: float = 0.0, delta_1: float = 0.0, delta_c: Optional[float] = None, delta_2: float = 0.0,
                gamma_2: float = 0.02, gamma_3: float = 1.0, gamma_4: float = 1.0,
                k13_ell: float = 1.0, k14_ell: float = 1.0, **medium) -> SystemParams:
    """Parameter set from complex field values; Δc defaults to the closed value Δp − Δ₁ + Δ₂."""
    delta_c = delta_p - delta_1 + delta_2 if delta_c is None else delta_c
    return SystemParams(
        fields=FieldSet(
            omega_p=ComplexRabi.from_complex(omega_p),
            omega_c=ComplexRabi.from_complex(omega_c),
            omega_1=ComplexRabi.from_complex(omega_1),
            omega_2=ComplexRabi.from_complex(omega_2),
        ),
        detunings=Detunings(delta_p=delta_p, delta_1=delta_1, delta_c=delta_c, delta_2=delta_2),
        decays=Decays(gamma_2=gamma_2, gamma_3=gamma_3, gamma_4=gamma_4),
        medium=Medium(k13_ell=k13_ell, k14_ell=k14_ell, **medium),
    )


def random_complex(rng: np.random.Generator, low: float, high: float) -> complex:
    return float(rng.uniform(low, high)) * cmath.exp(1j * float(rng.uniform(-math.pi, math.pi)))


def local_minima(xs, ys) -> list[float]:
    return [float(xs[i]) for i in range(1, len(ys) - 1) if ys[i] < ys[i - 1] and ys[i] < ys[i + 1]]
