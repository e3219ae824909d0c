import enum
import math
from typing import Optional

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from phaseswitch.model.schema import SystemParams


class WaveformKind(enum.Enum):
    SINUSOID = 'sinusoid'
    SQUARE = 'square'

    @classmethod
    def from_name(cls, name: str):
        for kind in cls:
            if kind.value == name.strip().lower():
                return kind
        raise ValueError(f'No WaveformKind found for name: {name}')


class PhaseWaveform(BaseModel):
    """
    Control-phase modulation Φc(t) applied on top of the scenario's control phase.

    Attributes:
        kind (WaveformKind): Sinusoid Φc = A·cos(2πft) + φ₀, or square wave alternating φ₀ and φ₀ + A.
        frequency_hz (float): Modulation frequency; informational, the quasi-static evaluation is scale-free.
        amplitude (float): A in radians.
        offset (float): φ₀ in radians.
        samples_per_period (int): Samples per modulation period.
        periods (int): Number of periods sampled.
    """
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    kind: WaveformKind = WaveformKind.SQUARE
    frequency_hz: float = Field(default=2.3e3, gt=0.0)
    amplitude: float = math.pi
    offset: float = 0.0
    samples_per_period: int = Field(default=64, ge=1)
    periods: int = Field(default=1, ge=1)

    def phase_at(self, t_over_period: float) -> float:
        if self.kind is WaveformKind.SINUSOID:
            return self.amplitude * math.cos(2.0 * math.pi * t_over_period) + self.offset
        return self.offset if (t_over_period % 1.0) < 0.5 else self.offset + self.amplitude

    def sample_times(self) -> list[float]:
        return [k / self.samples_per_period for k in range(self.samples_per_period * self.periods)]


class SwitchingMetrics(BaseModel):
    """
    Contrast of the phase-controlled switch.

    Attributes:
        i_in (float): Incident intensity.
        i_open (float): Transmitted intensity in the blocking state.
        i_close (float): Transmitted intensity in the passing state.
        eta (float): (i_close − i_open)/i_in.
        warnings (list[str]): Inconsistencies among the three intensities, reported unclamped.
    """
    i_in: float
    i_open: float
    i_close: float
    eta: float
    warnings: list[str] = Field(default_factory=list)


class PhotonBudget(BaseModel):
    g_p: float
    g_c: float
    n_p: float
    alpha: float = Field(description="|Omega_2 g_p / (Omega_1 g_c)|^2")
    n_c: float = Field(description="Control photon number alpha * n_p needed for destructive interference")


class PhaseScan(BaseModel):
    table: pd.DataFrame
    argmax: Optional[float] = Field(default=None, description="Control phase of maximal total transmission")
    argmin: Optional[float] = Field(default=None, description="Control phase of minimal total transmission")

    model_config = ConfigDict(arbitrary_types_allowed=True)


class Scenario(BaseModel):
    """
    A named parameter set with the run settings that reproduce one figure.

    Attributes:
        name (str): Preset name.
        description (str): One-line summary.
        params (SystemParams): Physical parameters in units of γ₃; the weak fields are the input.
        grid (tuple): (start, stop, step) of the detuning scan in units of γ₃.
        operating_point (str): 'zero', 'omega' or a number, for single-point runs.
        waveform (PhaseWaveform): Control-phase modulation for switching runs.
    """
    model_config = ConfigDict(frozen=True)

    name: str
    description: str = ''
    params: SystemParams
    grid: tuple[float, float, float] = (-4.0, 4.0, 0.01)
    operating_point: str = 'zero'
    waveform: PhaseWaveform = Field(default_factory=PhaseWaveform)


__all__ = [
    "WaveformKind",
    "PhaseWaveform",
    "SwitchingMetrics",
    "PhotonBudget",
    "PhaseScan",
    "Scenario",
]
