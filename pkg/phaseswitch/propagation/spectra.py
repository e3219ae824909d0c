import enum
import math
from typing import Callable, Iterable, Optional

import numpy as np
import pandas as pd

from phaseswitch.atoms.coherences import scattering_rate, solve_amplitudes
from phaseswitch.exceptions import InvalidParametersError, SingularityError
from phaseswitch.logger import logger, logit
from phaseswitch.model.schema import SystemParams
from phaseswitch.model.validation import ensure_valid
from phaseswitch.propagation.coupled_mode import coupled_mode_matrix
from phaseswitch.propagation.transfer import input_vector, transfer_result, transfer_matrix
from phaseswitch.utils.parallel import map_ordered

NAN = math.nan


class PointFlag(enum.Enum):
    OK = ''
    SINGULAR = 'singular'
    INVALID = 'invalid'


def scan_grid(start: float, stop: float, step: float) -> np.ndarray:
    """Evenly spaced detunings from `start` to `stop` inclusive."""
    if not step > 0:
        raise ValueError(f"Grid step must be positive, got {step}")
    if not start < stop:
        raise ValueError(f"Grid start must be below stop, got {start} >= {stop}")
    count = int(math.floor((stop - start) / step + 1e-9))
    return start + step * np.arange(count + 1)


def evaluate_point(evaluate: Callable[[], dict], empty: dict) -> dict:
    """Run one scan point, marking singular or inadmissible points instead of raising."""
    try:
        return {**evaluate(), 'flag': PointFlag.OK.value}
    except SingularityError as e:
        logger.debug(f"Singular scan point: {e}")
        return {**empty, 'flag': PointFlag.SINGULAR.value}
    except InvalidParametersError as e:
        logger.debug(f"Inadmissible scan point: {e}")
        return {**empty, 'flag': PointFlag.INVALID.value}


def _optional(value: Optional[float]) -> float:
    return NAN if value is None else value


def _scan(grid: Iterable[float], point: Callable[[float], dict], columns: list[str]) -> pd.DataFrame:
    grid = [float(delta) for delta in grid]
    rows = map_ordered(point, grid)
    return pd.DataFrame([{'delta': delta, **row} for delta, row in zip(grid, rows)], columns=columns)


@logit()
def transmission_spectrum(params: SystemParams,
                          input: Optional[tuple[complex, complex]] = None,
                          grid: Iterable[float] = ()) -> pd.DataFrame:
    """
    Probe and control transmission while both weak lasers scan together (Δp = Δ, Δc = Δ − Δ₁ + Δ₂).

    Returns:
        pd.DataFrame: Columns delta, transmission_p, transmission_c, flag; one row per grid point.
    """
    vector = input_vector(params, input)
    empty = {'transmission_p': NAN, 'transmission_c': NAN}

    def point(delta: float) -> dict:
        def evaluate():
            result = transfer_result(transfer_matrix(coupled_mode_matrix(params.at_scan_point(delta))), vector)
            return {'transmission_p': _optional(result.transmission_p),
                    'transmission_c': _optional(result.transmission_c)}
        return evaluate_point(evaluate, empty)

    return _scan(grid, point, ['delta', 'transmission_p', 'transmission_c', 'flag'])


def fluorescence_integral(params: SystemParams, vector: np.ndarray) -> float:
    """
    Scattering rate integrated along the medium by the midpoint rule on `n_slices` slices.

    The column density is represented by the mean of K₁₃ℓ and K₁₄ℓ, so an empty medium gives 0.
    """
    ensure_valid(params)
    medium = params.medium
    cm = coupled_mode_matrix(params)
    n = medium.n_slices
    densities = []
    for j in range(n):
        omega_p, omega_c = transfer_matrix(cm, (j + 0.5) / n) @ vector
        densities.append(scattering_rate(params, solve_amplitudes(params, omega_p, omega_c)))
    column = 0.5 * (medium.k13_ell + medium.k14_ell)
    return medium.fluorescence_scale * column * float(np.mean(densities))


@logit()
def fluorescence_spectrum(params: SystemParams,
                          input: Optional[tuple[complex, complex]] = None,
                          grid: Iterable[float] = ()) -> pd.DataFrame:
    """
    Fluorescence collected from the whole medium versus the common weak-laser detuning.

    Returns:
        pd.DataFrame: Columns delta, fluorescence, flag.
    """
    vector = input_vector(params, input)

    def point(delta: float) -> dict:
        return evaluate_point(
            lambda: {'fluorescence': fluorescence_integral(params.at_scan_point(delta), vector)},
            {'fluorescence': NAN})

    return _scan(grid, point, ['delta', 'fluorescence', 'flag'])


@logit()
def populations_spectrum(params: SystemParams,
                         input: Optional[tuple[complex, complex]] = None,
                         grid: Iterable[float] = ()) -> pd.DataFrame:
    """
    Excited populations and scattering rate at the medium entrance.

    Returns:
        pd.DataFrame: Columns delta, p3, p4, fluorescence_density, flag.
    """
    omega_p, omega_c = input_vector(params, input)

    def point(delta: float) -> dict:
        def evaluate():
            scanned = ensure_valid(params.at_scan_point(delta))
            coherences = solve_amplitudes(scanned, omega_p, omega_c)
            return {'p3': coherences.p3, 'p4': coherences.p4,
                    'fluorescence_density': scattering_rate(scanned, coherences)}
        return evaluate_point(evaluate, {'p3': NAN, 'p4': NAN, 'fluorescence_density': NAN})

    return _scan(grid, point, ['delta', 'p3', 'p4', 'fluorescence_density', 'flag'])


__all__ = [
    "PointFlag",
    "scan_grid",
    "evaluate_point",
    "transmission_spectrum",
    "fluorescence_integral",
    "fluorescence_spectrum",
    "populations_spectrum",
]
