import cmath
import math
from typing import Callable, Iterable, Optional, Union

import numpy as np
import pandas as pd

from phaseswitch.exceptions import DomainError
from phaseswitch.experiments.schema import PhaseScan, PhaseWaveform, SwitchingMetrics
from phaseswitch.logger import logger, logit
from phaseswitch.model.schema import SystemParams
from phaseswitch.propagation.coupled_mode import coupled_mode_matrix
from phaseswitch.propagation.spectra import NAN, evaluate_point
from phaseswitch.propagation.transfer import input_vector, transfer_matrix, transfer_result

DEFAULT_PHASE_POINTS = 129


def operating_point(params: SystemParams, name: Union[str, float]) -> float:
    """
    Resolve a named detuning: 'zero' is 0 and 'omega' is Ω = √(|Ω₁|² + |Ω₂|²); numbers pass through.
    """
    if isinstance(name, (int, float)):
        return float(name)
    key = name.strip().lower()
    if key == 'zero':
        return 0.0
    if key == 'omega':
        return params.fields.coupling_strength
    try:
        return float(key)
    except ValueError:
        raise DomainError(f"Unknown operating point {name!r}; use 'zero', 'omega' or a number") from None


def control_phase_evaluator(params: SystemParams,
                            delta: float,
                            input: Optional[tuple[complex, complex]] = None) -> Callable[[float], dict]:
    """
    Transmissions at detuning `delta` as a function of the control phase shift Φc.

    The transfer matrix does not depend on the weak fields, so it is computed once and reused.
    """
    vector = input_vector(params, input)
    empty = {'transmission_p': NAN, 'transmission_c': NAN, 'transmission_total': NAN}
    state = evaluate_point(lambda: {'t': transfer_matrix(coupled_mode_matrix(params.at_scan_point(delta)))}, {})

    def evaluate(phi_c: float) -> dict:
        if state['flag']:
            return {**empty, 'flag': state['flag']}
        shifted = np.array([vector[0], vector[1] * cmath.exp(1j * phi_c)])
        result = transfer_result(state['t'], shifted)
        return {
            'transmission_p': NAN if result.transmission_p is None else result.transmission_p,
            'transmission_c': NAN if result.transmission_c is None else result.transmission_c,
            'transmission_total': result.transmission_total,
            'flag': '',
        }

    return evaluate


def _extremum(table: pd.DataFrame, column: str, largest: bool) -> Optional[float]:
    valid = table[table['flag'] == ''].dropna(subset=[column])
    if valid.empty:
        return None
    index = valid[column].idxmax() if largest else valid[column].idxmin()
    return float(valid.loc[index, 'phi_c'])


@logit()
def phase_scan(params: SystemParams,
               delta: Optional[float] = None,
               input: Optional[tuple[complex, complex]] = None,
               grid: Optional[Iterable[float]] = None) -> PhaseScan:
    """
    Transmission versus the control phase shift at a fixed detuning.

    Args:
        params (SystemParams): Scenario parameters.
        delta (float, optional): Operating detuning, defaults to Δp of `params`.
        input (tuple, optional): (Ωp(0), Ωc(0)) before the shift, defaults to the weak fields.
        grid (Iterable[float], optional): Phase shifts, defaults to 129 points over [−π, π].

    Returns:
        PhaseScan: Table phi_c, transmission_p, transmission_c, transmission_total, flag and the
        phases of maximal and minimal total transmission (first occurrence on ties).
    """
    delta = params.detunings.delta_p if delta is None else delta
    grid = np.linspace(-math.pi, math.pi, DEFAULT_PHASE_POINTS) if grid is None else grid
    evaluate = control_phase_evaluator(params, delta, input)
    rows = [{'phi_c': float(phi), **evaluate(float(phi))} for phi in grid]
    table = pd.DataFrame(rows, columns=['phi_c', 'transmission_p', 'transmission_c', 'transmission_total', 'flag'])
    return PhaseScan(table=table,
                     argmax=_extremum(table, 'transmission_total', True),
                     argmin=_extremum(table, 'transmission_total', False))


@logit()
def switch_waveform(params: SystemParams,
                    waveform: PhaseWaveform,
                    delta: Optional[float] = None,
                    input: Optional[tuple[complex, complex]] = None) -> pd.DataFrame:
    """
    Quasi-static response to a control-phase modulation.

    Each sample sets the control phase shift to Φc(t) and evaluates the steady-state transfer.

    Returns:
        pd.DataFrame: Columns t_over_T, phi_c, transmission_p, transmission_c, transmission_total, flag,
        where transmission_total is the output power over the input power.
    """
    delta = params.detunings.delta_p if delta is None else delta
    evaluate = control_phase_evaluator(params, delta, input)
    rows = []
    for t in waveform.sample_times():
        phi_c = waveform.phase_at(t)
        rows.append({'t_over_T': t, 'phi_c': phi_c, **evaluate(phi_c)})
    return pd.DataFrame(rows, columns=['t_over_T', 'phi_c', 'transmission_p', 'transmission_c',
                                       'transmission_total', 'flag'])


def switching_efficiency(high: float, low: float, i_in: float) -> SwitchingMetrics:
    """
    Switching efficiency η = (I_close − I_open)/I_in with I_close = `high` and I_open = `low`.

    Out-of-order intensities are reported in the warnings, never clamped.

    Raises:
        DomainError: If `i_in` is not positive.
    """
    if not i_in > 0:
        raise DomainError(f"Incident intensity must be positive, got {i_in}")
    warnings = []
    if not 0 <= low <= high <= i_in:
        warnings.append(f"Expected 0 <= low <= high <= i_in, got low={low}, high={high}, i_in={i_in}")
    eta = (high - low) / i_in
    if not -1.0 <= eta <= 1.0:
        warnings.append(f"Switching efficiency {eta:.6g} lies outside [-1, 1]")
    for warning in warnings:
        logger.warning(warning)
    return SwitchingMetrics(i_in=i_in, i_open=low, i_close=high, eta=eta, warnings=warnings)


def waveform_efficiency(table: pd.DataFrame) -> SwitchingMetrics:
    """Efficiency from the plateaus of a simulated waveform, normalized to unit incident power."""
    valid = table[table['flag'] == '']['transmission_total'].dropna()
    if valid.empty:
        raise DomainError("Waveform has no admissible samples")
    return switching_efficiency(float(valid.max()), float(valid.min()), 1.0)


__all__ = [
    "operating_point",
    "control_phase_evaluator",
    "phase_scan",
    "switch_waveform",
    "switching_efficiency",
    "waveform_efficiency",
]
