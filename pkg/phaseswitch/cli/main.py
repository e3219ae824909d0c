import argparse
import math
import sys
from typing import Optional

import numpy as np
import pandas as pd

from phaseswitch.atoms.coherences import steady_coherences
from phaseswitch.atoms.dressed import dressed_basis, transition_probabilities
from phaseswitch.atoms.lindblad import weak_field_response
from phaseswitch.cli.config_file import RunConfig, dump_config, parse_config
from phaseswitch.cli.output import write_table
from phaseswitch.cli.svg import line_plot, svgwrite
from phaseswitch.config import SimulationConfig
from phaseswitch.exceptions import ConfigError, PhaseSwitchError
from phaseswitch.experiments.presets import PRESETS
from phaseswitch.experiments.switching import operating_point, phase_scan, switch_waveform, waveform_efficiency
from phaseswitch.logger import logger
from phaseswitch.model.units import UnitMode, from_gamma3
from phaseswitch.propagation.group_delay import group_delay
from phaseswitch.propagation.spectra import (fluorescence_spectrum, populations_spectrum, scan_grid,
                                             transmission_spectrum)

COMMANDS = ['spectrum', 'fluorescence', 'switch', 'phasescan', 'populations', 'dressed', 'steady', 'groupdelay',
            'validate']

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_ERROR = 2


class Outcome:
    """Table, summary lines and optional plot produced by one subcommand."""

    def __init__(self, table: pd.DataFrame, summary: Optional[list[str]] = None, plot: Optional[dict] = None):
        self.table = table
        self.summary = summary or []
        self.plot = plot


def _delta_column(table: pd.DataFrame, units: UnitMode) -> pd.DataFrame:
    table = table.copy()
    table['delta'] = [from_gamma3(delta, units) for delta in table['delta']]
    return table


def _detuning_scan(config: RunConfig, scan, columns: list[str], ylabel: str) -> Outcome:
    table = _delta_column(scan(config.params, grid=scan_grid(*config.grid)), config.units)
    unit = 'MHz' if config.units is UnitMode.MHZ else 'gamma_3'
    return Outcome(table, plot={
        'x': 'delta', 'series': columns, 'xlabel': f"detuning ({unit})", 'ylabel': ylabel,
    })


def _spectrum(config: RunConfig) -> Outcome:
    return _detuning_scan(config, transmission_spectrum, ['transmission_p', 'transmission_c'], 'transmission')


def _fluorescence(config: RunConfig) -> Outcome:
    return _detuning_scan(config, fluorescence_spectrum, ['fluorescence'], 'fluorescence (a.u.)')


def _populations(config: RunConfig) -> Outcome:
    return _detuning_scan(config, populations_spectrum, ['p3', 'p4'], 'population')


def _switch(config: RunConfig) -> Outcome:
    delta = operating_point(config.params, config.operating_point)
    table = switch_waveform(config.params, config.waveform, delta)
    metrics = waveform_efficiency(table)
    summary = [f"eta={metrics.eta:.15g}", f"i_close={metrics.i_close:.15g}", f"i_open={metrics.i_open:.15g}",
               f"i_in={metrics.i_in:.15g}"]
    return Outcome(table[['t_over_T', 'phi_c', 'transmission_total', 'flag']], summary, plot={
        'x': 't_over_T', 'series': ['transmission_total'], 'xlabel': 't/T', 'ylabel': 'transmission',
    })


def _phasescan(config: RunConfig) -> Outcome:
    delta = operating_point(config.params, config.operating_point)
    scan = phase_scan(config.params, delta, grid=np.linspace(-math.pi, math.pi, config.phase_points))
    argmax = math.nan if scan.argmax is None else scan.argmax
    argmin = math.nan if scan.argmin is None else scan.argmin
    summary = [f"argmax={argmax:.15g}", f"argmin={argmin:.15g}"]
    return Outcome(scan.table, summary, plot={
        'x': 'phi_c', 'series': ['transmission_p', 'transmission_c', 'transmission_total'],
        'xlabel': 'control phase shift (rad)', 'ylabel': 'transmission',
    })


def _operating_params(config: RunConfig):
    return config.params.at_scan_point(operating_point(config.params, config.operating_point))


def _groupdelay(config: RunConfig) -> Outcome:
    result = group_delay(_operating_params(config), step=config.delay_step)
    table = pd.DataFrame([{
        'tau_p': math.nan if result.tau_p is None else result.tau_p,
        'tau_c': math.nan if result.tau_c is None else result.tau_c,
        'vg_formula_p': result.vg_formula_p,
        'vg_formula_c': result.vg_formula_c,
        'matched': result.matched,
    }], columns=['tau_p', 'tau_c', 'vg_formula_p', 'vg_formula_c', 'matched'])
    return Outcome(table)


def _dressed(config: RunConfig) -> Outcome:
    fields = config.params.fields
    basis = dressed_basis(fields.omega_1, fields.omega_2)
    rows = []
    for name, (shift, vector) in basis.states().items():
        row = {'state': name, 'shift': from_gamma3(shift, config.units)}
        for level, amplitude in enumerate(vector, start=1):
            row[f're_{level}'] = float(np.real(amplitude))
            row[f'im_{level}'] = float(np.imag(amplitude))
        rows.append(row)
    probabilities = transition_probabilities(fields)
    summary = [f"p_pm={probabilities.p_pm:.15g}", f"p_0={probabilities.p_0:.15g}"]
    columns = ['state', 'shift'] + [f'{part}_{level}' for level in range(1, 5) for part in ('re', 'im')]
    return Outcome(pd.DataFrame(rows, columns=columns), summary)


def _relative(oracle: float, closed: float) -> float:
    return abs(oracle - closed) / abs(closed) if closed != 0 else math.nan


def _steady(config: RunConfig) -> Outcome:
    params = _operating_params(config)
    closed = steady_coherences(params)
    oracle = weak_field_response(params)
    pairs = [
        ('p3', closed.p3, oracle.p3),
        ('p4', closed.p4, oracle.p4),
        ('re_rho31', closed.a3.real, oracle.rho31.real),
        ('im_rho31', closed.a3.imag, oracle.rho31.imag),
        ('re_rho41', closed.a4.real, oracle.rho41.real),
        ('im_rho41', closed.a4.imag, oracle.rho41.imag),
    ]
    table = pd.DataFrame(
        [{'quantity': name, 'closed_form': c, 'oracle': o, 'relative_difference': _relative(o, c)}
         for name, c, o in pairs],
        columns=['quantity', 'closed_form', 'oracle', 'relative_difference'])
    diagonal = oracle.state.populations
    summary = [f"rho_{i}{i}={diagonal[i - 1]:.15g}" for i in range(1, 5)]
    summary += [f"residual={oracle.state.residual:.3g}"] + [f"warning: {w}" for w in oracle.warnings]
    return Outcome(table, summary)


HANDLERS = {
    'spectrum': _spectrum,
    'fluorescence': _fluorescence,
    'populations': _populations,
    'switch': _switch,
    'phasescan': _phasescan,
    'groupdelay': _groupdelay,
    'dressed': _dressed,
    'steady': _steady,
}


def run(command: str, config: RunConfig, out: Optional[str] = None, svg: Optional[str] = None) -> int:
    """
    Execute one subcommand and write its artifacts.

    Args:
        command (str): One of COMMANDS.
        config (RunConfig): Resolved configuration.
        out (str, optional): CSV path; stdout when omitted.
        svg (str, optional): Path of an SVG line plot, for commands that have one.

    Returns:
        int: Exit status.
    """
    if command == 'validate':
        for line in config.report.lines() + [f"warning: {w}" for w in config.warnings]:
            print(line)
        if not config.report.ok:
            return EXIT_INVALID
        print("ok")
        return EXIT_OK
    if not config.report.ok:
        for line in config.report.lines():
            print(line, file=sys.stderr)
        return EXIT_INVALID

    outcome = HANDLERS[command](config)
    write_table(outcome.table, out)
    summary_stream = sys.stdout if out else sys.stderr
    for line in outcome.summary:
        print(line, file=summary_stream)
    if svg:
        if outcome.plot is None:
            logger.warning(f"{command} has no plot; ignoring --svg")
        else:
            plot = outcome.plot
            title = f"{command} ({config.scenario})" if config.scenario else command
            svgwrite(line_plot(list(outcome.table[plot['x']]),
                               {name: list(outcome.table[name]) for name in plot['series']},
                               title=title, xlabel=plot['xlabel'], ylabel=plot['ylabel']), svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='phaseswitch',
        description="Simulate phase-controlled light switching in a four-level double-lambda atomic medium.")
    parser.add_argument('command', choices=COMMANDS, help="What to compute")
    parser.add_argument('--config', metavar='PATH', help="Run configuration file (key = value with [sections])")
    parser.add_argument('--scenario', choices=sorted(PRESETS), help="Start from a named preset")
    parser.add_argument('--out', metavar='PATH', help="CSV output path (default: stdout)")
    parser.add_argument('--svg', metavar='PATH', help="Also write an SVG line plot")
    parser.add_argument('--units', choices=[mode.value for mode in UnitMode],
                        help="Unit mode for rates and detunings (default: gamma3)")
    parser.add_argument('--strict', action='store_true', help="Reject unknown configuration keys")
    parser.add_argument('--dump-config', action='store_true', help="Print the resolved configuration and exit")
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if not args.config and not args.scenario:
            raise ConfigError("no parameters given: use --config PATH or --scenario NAME")
        text = ''
        if args.config:
            with open(args.config, encoding='utf-8') as f:
                text = f.read()
        config = parse_config(text,
                              strict=args.strict or SimulationConfig.get_strict_config(),
                              scenario=args.scenario,
                              units=args.units,
                              validate_params=False)
        if args.dump_config:
            sys.stdout.write(dump_config(config))
            return EXIT_OK
        return run(args.command, config, args.out, args.svg)
    except (PhaseSwitchError, ValueError, OSError) as e:
        print(f"phaseswitch: error: {e}", file=sys.stderr)
        return EXIT_ERROR


__all__ = [
    "COMMANDS",
    "run",
    "build_parser",
    "main",
]
