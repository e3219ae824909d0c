"""
Scenario presets, one per reproduced figure.

All values are in units of γ₃. Caption values quoted in MHz mean Ω/2π and are converted with
γ₃/2π = 5.4 MHz. The sideband presets carry φ₁ = 0, φ₂ = π, φp = 0, φc = π, since the frequency
modulated beams give Ω₁ ≈ −Ω₂ and Ωc ≈ −Ωp.
"""
import math

from phaseswitch.experiments.schema import PhaseWaveform, Scenario, WaveformKind
from phaseswitch.model.schema import ComplexRabi, Decays, Detunings, FieldSet, Medium, SystemParams
from phaseswitch.model.units import mhz_to_gamma3

CAPTION_GAMMA3_MHZ = 5.4
WEAK_AMPLITUDE = 0.01


def _caption(value_mhz: float) -> float:
    return mhz_to_gamma3(value_mhz, CAPTION_GAMMA3_MHZ)


def _params(omega_1: float, omega_2: ComplexRabi, omega_c: ComplexRabi, optical_depth: float,
            cross_coupling: bool = True) -> SystemParams:
    return SystemParams(
        fields=FieldSet(
            omega_p=ComplexRabi(amplitude=WEAK_AMPLITUDE),
            omega_c=omega_c,
            omega_1=ComplexRabi(amplitude=omega_1),
            omega_2=omega_2,
        ),
        detunings=Detunings(),
        decays=Decays(gamma_2=0.02, gamma_3=1.0, gamma_4=1.0),
        medium=Medium(k13_ell=optical_depth, k14_ell=optical_depth, cross_coupling=cross_coupling),
    )


def _fig2(name: str, description: str, omega_c: ComplexRabi, cross_coupling: bool = True) -> Scenario:
    return Scenario(
        name=name,
        description=description,
        params=_params(1.0, ComplexRabi(amplitude=1.0), omega_c, 1.0, cross_coupling),
        grid=(-4.0, 4.0, 0.01),
    )


def _sideband(name: str, description: str, omega: float, with_control: bool = True,
              waveform: PhaseWaveform = PhaseWaveform()) -> Scenario:
    omega_c = ComplexRabi(amplitude=WEAK_AMPLITUDE, phase=math.pi) if with_control else ComplexRabi()
    return Scenario(
        name=name,
        description=description,
        params=_params(omega, ComplexRabi(amplitude=omega, phase=math.pi), omega_c, 0.8, with_control),
        grid=(-3.0, 3.0, 0.01),
        waveform=waveform,
    )


PRESETS: dict[str, Scenario] = {scenario.name: scenario for scenario in [
    _fig2('fig2a', "Probe alone: absorption at zero detuning and near the dressed shifts",
          ComplexRabi(), cross_coupling=False),
    _fig2('fig2b', "In-phase probe and control: destructive interference at zero detuning",
          ComplexRabi(amplitude=WEAK_AMPLITUDE)),
    _fig2('fig2c', "Anti-phase probe and control: constructive interference at zero detuning",
          ComplexRabi(amplitude=WEAK_AMPLITUDE, phase=math.pi)),
    _sideband('fig4', "Sideband fields with control, destructive at zero detuning", _caption(4.0)),
    _sideband('fig4-nocontrol', "Sideband coupling fields without control", _caption(4.0), with_control=False),
    _sideband('fig5-sin', "Sinusoidal control-phase modulation", _caption(4.5),
              waveform=PhaseWaveform(kind=WaveformKind.SINUSOID, amplitude=math.pi)),
    _sideband('fig5-square', "Square-wave control-phase switching between 0 and pi", _caption(4.5),
              waveform=PhaseWaveform(kind=WaveformKind.SQUARE, amplitude=math.pi)),
]}


def get_scenario(name: str) -> Scenario:
    try:
        return PRESETS[name.strip().lower()]
    except KeyError:
        raise ValueError(f"Unknown scenario {name!r}; choose one of {', '.join(PRESETS)}") from None


__all__ = [
    "CAPTION_GAMMA3_MHZ",
    "WEAK_AMPLITUDE",
    "PRESETS",
    "get_scenario",
]
