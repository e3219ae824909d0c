"""
Run configuration files.

A run configuration is line-oriented ``key = value`` text with ``[section]`` headers; keys before
the first header belong to ``[run]``. Rates, detunings and Rabi amplitudes are read in the unit
mode of the run (``gamma3`` or ``mhz``, where X MHz means Ω/2π = X MHz); a ``_mhz`` suffix on such
a key always means MHz. Optical depths ``k13_ell``/``k14_ell`` are ratios K·ℓ/γ₃ and phases are
radians in every mode.

Sections and keys::

    [run]        scenario, units, operating_point
    [fields]     omega_p, phi_p, omega_c, phi_c, omega_1, phi_1, omega_2, phi_2
    [detunings]  delta_p, delta_1, delta_c, delta_2
    [decays]     gamma_2, gamma_3, gamma_4
    [medium]     k13_ell, k14_ell, n_slices, omega_ratio, cross_coupling, fluorescence_scale
    [grid]       start, stop, step
    [switch]     kind, frequency_hz, amplitude, offset, samples_per_period, periods
    [phasescan]  points
    [groupdelay] step

Without a scenario, omega_1, omega_2, k13_ell and k14_ell are required.
"""
import configparser
import re
from typing import Optional, Union

from pydantic import BaseModel, Field, ValidationError

from phaseswitch.exceptions import ConfigError, InvalidParametersError
from phaseswitch.experiments.presets import get_scenario
from phaseswitch.experiments.schema import PhaseWaveform, WaveformKind
from phaseswitch.logger import logger
from phaseswitch.model.schema import SystemParams
from phaseswitch.model.units import UnitMode, mhz_to_gamma3
from phaseswitch.model.validation import ValidationReport, validate

_TOP = '__top__'
_HEADER = re.compile(r'^\s*\[([^\]]+)\]')
_KEY = re.compile(r'^\s*([^#;=:\s\[][^=:]*?)\s*[=:]')

# Keys holding a rate, detuning or Rabi amplitude, converted according to the unit mode.
_RATE_KEYS = {
    'fields': {'omega_p', 'omega_c', 'omega_1', 'omega_2'},
    'detunings': {'delta_p', 'delta_1', 'delta_c', 'delta_2'},
    'decays': {'gamma_2', 'gamma_3', 'gamma_4'},
    'grid': {'start', 'stop', 'step'},
    'groupdelay': {'step'},
}
_PLAIN_KEYS = {
    'run': {'scenario', 'units', 'operating_point'},
    'fields': {'phi_p', 'phi_c', 'phi_1', 'phi_2'},
    'medium': {'k13_ell', 'k14_ell', 'n_slices', 'omega_ratio', 'cross_coupling', 'fluorescence_scale'},
    'switch': {'kind', 'frequency_hz', 'amplitude', 'offset', 'samples_per_period', 'periods'},
    'phasescan': {'points'},
}
_REQUIRED = [('fields', 'omega_1'), ('fields', 'omega_2'), ('medium', 'k13_ell'), ('medium', 'k14_ell')]
_FIELD_NAMES = {'p': 'omega_p', 'c': 'omega_c', '1': 'omega_1', '2': 'omega_2'}


class RunConfig(BaseModel):
    """
    Fully resolved run configuration, everything in units of γ₃.

    Attributes:
        scenario (str, optional): Preset the parameters started from.
        params (SystemParams): Physical parameters.
        grid (tuple): (start, stop, step) of detuning scans.
        units (UnitMode): Unit mode of the input and of detuning columns in the output.
        operating_point (str): Detuning for single-point runs: 'zero', 'omega' or a number.
        waveform (PhaseWaveform): Control-phase modulation for switching runs.
        phase_points (int): Number of control phases in a phase scan over [−π, π].
        delay_step (float): Finite-difference step for group delays.
        report (ValidationReport): Result of validating `params`.
        warnings (list[str]): Non-fatal problems found while parsing.
    """
    scenario: Optional[str] = None
    params: SystemParams
    grid: tuple[float, float, float] = (-4.0, 4.0, 0.01)
    units: UnitMode = UnitMode.GAMMA3
    operating_point: str = 'zero'
    waveform: PhaseWaveform = Field(default_factory=PhaseWaveform)
    phase_points: int = 129
    delay_step: float = 1e-4
    report: ValidationReport = Field(default_factory=ValidationReport)
    warnings: list[str] = Field(default_factory=list)


def _line_map(text: str) -> dict[tuple[str, str], int]:
    lines = {}
    section = _TOP
    for number, line in enumerate(text.splitlines(), start=1):
        header = _HEADER.match(line)
        if header:
            section = header.group(1).strip().lower()
            lines.setdefault((section, ''), number)
            continue
        key = _KEY.match(line)
        if key:
            lines.setdefault((section, key.group(1).strip().lower()), number)
    return lines


def _read(text: str) -> configparser.ConfigParser:
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=('#', ';'),
                                       default_section='__defaults__')
    try:
        parser.read_string(f"[{_TOP}]\n{text}")
    except configparser.ParsingError as e:
        lineno, line = e.errors[0]
        raise ConfigError(f"cannot parse {line.strip()!r}", lineno - 1) from None
    except configparser.DuplicateOptionError as e:
        raise ConfigError(f"key {e.option!r} given twice in section [{e.section}]", e.lineno - 1) from None
    except configparser.DuplicateSectionError as e:
        raise ConfigError(f"section [{e.section}] given twice", e.lineno - 1) from None
    except configparser.Error as e:
        raise ConfigError(str(e)) from None
    return parser


class _Entries:
    """Key lookup over the parsed sections with line numbers for diagnostics."""

    def __init__(self, parser: configparser.ConfigParser, lines: dict, strict: bool):
        self.lines = lines
        self.values: dict[tuple[str, str], str] = {}
        self.warnings: list[str] = []
        for section in parser.sections():
            name = 'run' if section == _TOP else section.strip().lower()
            if name not in _PLAIN_KEYS and name not in _RATE_KEYS:
                self._unknown(f"unknown section [{name}]", lines.get((name, '')), strict)
                continue
            for key, value in parser.items(section):
                line = lines.get((section.strip().lower(), key))
                if not self._known(name, key):
                    self._unknown(f"unknown key {key!r} in section [{name}]", line, strict)
                    continue
                if (name, key) in self.values:
                    raise ConfigError(f"key {key!r} given twice in section [{name}]", line)
                self.values[(name, key)] = value
                self.lines[(name, key)] = line

    @staticmethod
    def _known(section: str, key: str) -> bool:
        if key in _PLAIN_KEYS.get(section, set()) or key in _RATE_KEYS.get(section, set()):
            return True
        return key.endswith('_mhz') and key[:-4] in _RATE_KEYS.get(section, set())

    def _unknown(self, message: str, line: Optional[int], strict: bool):
        if strict:
            raise ConfigError(message, line)
        message = f"line {line}: {message}" if line else message
        self.warnings.append(message)
        logger.warning(message)

    def has(self, section: str, key: str) -> bool:
        return (section, key) in self.values or (section, f"{key}_mhz") in self.values

    def text(self, section: str, key: str) -> Optional[str]:
        return self.values.get((section, key))

    def number(self, section: str, key: str, cast=float):
        value = self.values.get((section, key))
        if value is None:
            return None
        try:
            return cast(value)
        except ValueError:
            raise ConfigError(f"{key} expects a number, got {value!r}", self.lines.get((section, key))) from None

    def rate(self, section: str, key: str, units: UnitMode, gamma3_mhz: Optional[float]) -> Optional[float]:
        """A rate in units of γ₃, from `key` in the unit mode or from `key_mhz`."""
        if (section, f"{key}_mhz") in self.values:
            return mhz_to_gamma3(self.number(section, f"{key}_mhz"), gamma3_mhz)
        value = self.number(section, key)
        if value is None or units is UnitMode.GAMMA3:
            return value
        return mhz_to_gamma3(value, gamma3_mhz)

    def flag(self, section: str, key: str) -> Optional[bool]:
        value = self.values.get((section, key))
        if value is None:
            return None
        state = configparser.ConfigParser.BOOLEAN_STATES.get(value.strip().lower())
        if state is None:
            raise ConfigError(f"{key} expects true or false, got {value!r}", self.lines.get((section, key)))
        return state


def _units(entries: _Entries, override: Union[str, UnitMode, None]) -> UnitMode:
    if isinstance(override, UnitMode):
        return override
    name = override or entries.text('run', 'units') or UnitMode.GAMMA3.value
    try:
        return UnitMode.from_name(name)
    except ValueError as e:
        raise ConfigError(str(e), entries.lines.get(('run', 'units'))) from None


def _update_params(base: SystemParams, entries: _Entries, units: UnitMode,
                   gamma3_mhz: Optional[float]) -> SystemParams:
    data = base.model_dump()
    for suffix, name in _FIELD_NAMES.items():
        amplitude = entries.rate('fields', name, units, gamma3_mhz)
        phase = entries.number('fields', f"phi_{suffix}")
        if amplitude is not None:
            data['fields'][name]['amplitude'] = amplitude
        if phase is not None:
            data['fields'][name]['phase'] = phase
    for section, keys in (('detunings', _RATE_KEYS['detunings']), ('decays', _RATE_KEYS['decays'])):
        for key in keys:
            value = entries.rate(section, key, units, gamma3_mhz)
            if value is not None:
                data[section][key] = value
    for key in ('k13_ell', 'k14_ell', 'omega_ratio', 'fluorescence_scale'):
        value = entries.number('medium', key)
        if value is not None:
            data['medium'][key] = value
    n_slices = entries.number('medium', 'n_slices', int)
    if n_slices is not None:
        data['medium']['n_slices'] = n_slices
    cross_coupling = entries.flag('medium', 'cross_coupling')
    if cross_coupling is not None:
        data['medium']['cross_coupling'] = cross_coupling
    try:
        return SystemParams.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        location = '.'.join(str(part) for part in error['loc'])
        raise ConfigError(f"{location}: {error['msg']}") from None


def _waveform(base: PhaseWaveform, entries: _Entries) -> PhaseWaveform:
    data = base.model_dump()
    kind = entries.text('switch', 'kind')
    if kind is not None:
        try:
            data['kind'] = WaveformKind.from_name(kind)
        except ValueError as e:
            raise ConfigError(str(e), entries.lines.get(('switch', 'kind'))) from None
    for key in ('frequency_hz', 'amplitude', 'offset'):
        value = entries.number('switch', key)
        if value is not None:
            data[key] = value
    for key in ('samples_per_period', 'periods'):
        value = entries.number('switch', key, int)
        if value is not None:
            data[key] = value
    try:
        return PhaseWaveform.model_validate(data)
    except ValidationError as e:
        error = e.errors()[0]
        raise ConfigError(f"switch.{error['loc'][0]}: {error['msg']}") from None


def parse_config(text: str,
                 strict: bool = False,
                 scenario: Optional[str] = None,
                 units: Union[str, UnitMode, None] = None,
                 validate_params: bool = True,
                 gamma3_mhz: Optional[float] = None) -> RunConfig:
    """
    Parse a run configuration.

    Args:
        text (str): Configuration text.
        strict (bool): Treat unknown sections and keys as errors instead of warnings.
        scenario (str, optional): Preset name overriding the ``scenario`` key.
        units (str | UnitMode, optional): Unit mode overriding the ``units`` key.
        validate_params (bool): Raise when the resulting parameters violate an invariant.
        gamma3_mhz (float, optional): γ₃/2π for MHz conversion, defaults to the configured value.

    Returns:
        RunConfig: The resolved configuration.

    Raises:
        ConfigError: On syntax errors, unknown keys in strict mode, bad values or missing keys.
        InvalidParametersError: If `validate_params` and the parameters are not admissible.
    """
    entries = _Entries(_read(text), _line_map(text), strict)
    mode = _units(entries, units)

    scenario = scenario or entries.text('run', 'scenario')
    if scenario:
        try:
            preset = get_scenario(scenario)
        except ValueError as e:
            raise ConfigError(str(e), entries.lines.get(('run', 'scenario'))) from None
        base, grid, point, waveform = preset.params, preset.grid, preset.operating_point, preset.waveform
        scenario = preset.name
    else:
        for section, key in _REQUIRED:
            if not entries.has(section, key):
                raise ConfigError(f"missing required key {key!r} in section [{section}]")
        base, grid, point, waveform = SystemParams(), (-4.0, 4.0, 0.01), 'zero', PhaseWaveform()

    params = _update_params(base, entries, mode, gamma3_mhz)
    grid = tuple(
        value if value is not None else default
        for value, default in zip((entries.rate('grid', key, mode, gamma3_mhz) for key in ('start', 'stop', 'step')),
                                  grid))
    if not grid[2] > 0:
        raise ConfigError(f"grid step must be positive, got {grid[2]}", entries.lines.get(('grid', 'step')))
    if not grid[0] < grid[1]:
        raise ConfigError(f"grid start must be below stop, got {grid[0]} >= {grid[1]}",
                          entries.lines.get(('grid', 'start')))

    points = entries.number('phasescan', 'points', int)
    points = 129 if points is None else points
    if points < 2:
        raise ConfigError(f"phasescan points must be at least 2, got {points}",
                          entries.lines.get(('phasescan', 'points')))
    delay_step = entries.rate('groupdelay', 'step', mode, gamma3_mhz)
    delay_step = 1e-4 if delay_step is None else delay_step
    if not delay_step > 0:
        raise ConfigError(f"group delay step must be positive, got {delay_step}",
                          entries.lines.get(('groupdelay', 'step')))

    report = validate(params)
    if validate_params and not report.ok:
        raise InvalidParametersError(report)
    return RunConfig(
        scenario=scenario,
        params=params,
        grid=grid,
        units=mode,
        operating_point=entries.text('run', 'operating_point') or point,
        waveform=_waveform(waveform, entries),
        phase_points=points,
        delay_step=delay_step,
        report=report,
        warnings=entries.warnings,
    )


def dump_config(config: RunConfig) -> str:
    """
    Write a configuration back as text in γ₃ units; `parse_config` of the result reproduces it.
    """
    p = config.params
    f, d, g, m, w = p.fields, p.detunings, p.decays, p.medium, config.waveform
    sections = {
        'run': [('scenario', config.scenario), ('units', UnitMode.GAMMA3.value),
                ('operating_point', config.operating_point)],
        'fields': [item for suffix, name in _FIELD_NAMES.items() for item in (
            (name, getattr(f, name).amplitude), (f"phi_{suffix}", getattr(f, name).phase))],
        'detunings': [(key, getattr(d, key)) for key in ('delta_p', 'delta_1', 'delta_c', 'delta_2')],
        'decays': [(key, getattr(g, key)) for key in ('gamma_2', 'gamma_3', 'gamma_4')],
        'medium': [('k13_ell', m.k13_ell), ('k14_ell', m.k14_ell), ('n_slices', m.n_slices),
                   ('omega_ratio', m.omega_ratio), ('cross_coupling', m.cross_coupling),
                   ('fluorescence_scale', m.fluorescence_scale)],
        'grid': list(zip(('start', 'stop', 'step'), config.grid)),
        'switch': [('kind', w.kind.value), ('frequency_hz', w.frequency_hz), ('amplitude', w.amplitude),
                   ('offset', w.offset), ('samples_per_period', w.samples_per_period), ('periods', w.periods)],
        'phasescan': [('points', config.phase_points)],
        'groupdelay': [('step', config.delay_step)],
    }
    lines = []
    for section, items in sections.items():
        lines.append(f"[{section}]")
        for key, value in items:
            if value is None:
                continue
            if isinstance(value, bool):
                value = 'true' if value else 'false'
            elif isinstance(value, float):
                value = repr(value)
            lines.append(f"{key} = {value}")
        lines.append('')
    return '\n'.join(lines)


__all__ = [
    "RunConfig",
    "parse_config",
    "dump_config",
]
