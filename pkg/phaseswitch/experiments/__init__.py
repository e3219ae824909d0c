from .budget import photon_budget
from .presets import PRESETS, get_scenario
from .schema import WaveformKind, PhaseWaveform, SwitchingMetrics, PhotonBudget, PhaseScan, Scenario
from .switching import (operating_point, phase_scan, switch_waveform, switching_efficiency,
                        waveform_efficiency)
