import math

import numpy as np
import pandas as pd
import pytest

from helpers import local_minima, make_params
from phaseswitch.experiments.presets import PRESETS
from phaseswitch.propagation.spectra import (PointFlag, fluorescence_integral, fluorescence_spectrum,
                                             populations_spectrum, scan_grid, transmission_spectrum)
from phaseswitch.utils.parallel import map_ordered


def _spectrum(name: str) -> pd.DataFrame:
    scenario = PRESETS[name]
    return transmission_spectrum(scenario.params, grid=scan_grid(*scenario.grid))


def _at(table: pd.DataFrame, column: str, delta: float) -> float:
    index = (table['delta'] - delta).abs().idxmin()
    return float(table.loc[index, column])


def test_scan_grid_is_inclusive():
    np.testing.assert_allclose(scan_grid(-1.0, 1.0, 0.5), [-1.0, -0.5, 0.0, 0.5, 1.0])
    assert len(scan_grid(-4.0, 4.0, 0.01)) == 801


@pytest.mark.parametrize("start, stop, step", [(0.0, 1.0, 0.0), (0.0, 1.0, -0.1), (1.0, 1.0, 0.1)])
def test_scan_grid_rejects_bad_ranges(start, stop, step):
    with pytest.raises(ValueError):
        scan_grid(start, stop, step)


def test_probe_alone_has_three_absorption_dips():
    table = _spectrum('fig2a')
    assert list(table.columns) == ['delta', 'transmission_p', 'transmission_c', 'flag']
    assert table['transmission_c'].isna().all()
    minima = local_minima(table['delta'], table['transmission_p'])
    assert len(minima) == 3
    root2 = math.sqrt(2.0)
    assert abs(minima[0] + root2) <= 0.1
    assert abs(minima[1]) <= 0.05
    assert abs(minima[2] - root2) <= 0.1
    assert _at(table, 'transmission_p', 0.0) == pytest.approx(math.exp(-1.01), rel=1e-3)


def test_in_phase_control_opens_a_transparency_window():
    probe_alone = _spectrum('fig2a')
    in_phase = _spectrum('fig2b')
    assert _at(in_phase, 'transmission_p', 0.0) > 2.0 * _at(probe_alone, 'transmission_p', 0.0)
    assert _at(in_phase, 'transmission_p', 0.0) == pytest.approx(math.exp(-0.04 / 2.02), rel=1e-9)
    assert not [x for x in local_minima(in_phase['delta'], in_phase['transmission_p']) if abs(x) < 0.5]
    np.testing.assert_allclose(in_phase['transmission_c'], in_phase['transmission_p'], rtol=1e-9)


def test_anti_phase_control_follows_two_level_absorption():
    anti_phase = _spectrum('fig2c')
    assert _at(anti_phase, 'transmission_p', 0.0) < _at(_spectrum('fig2b'), 'transmission_p', 0.0)
    expected = np.exp(-2.0 / (anti_phase['delta'] ** 2 + 1.0))
    np.testing.assert_allclose(anti_phase['transmission_p'], expected, rtol=1e-9)
    # a single two-level dip: the dressed-state minima are gone
    assert local_minima(anti_phase['delta'], anti_phase['transmission_p']) == pytest.approx([0.0], abs=1e-12)


def test_singular_points_are_flagged():
    params = make_params(omega_p=0.01, omega_1=0.0, omega_2=0.0, gamma_2=0.0)
    table = transmission_spectrum(params, grid=[-1.0, 0.0, 1.0])
    assert list(table['flag']) == ['', PointFlag.SINGULAR.value, '']
    assert math.isnan(table.loc[1, 'transmission_p'])
    assert table.loc[0, 'transmission_p'] == pytest.approx(math.exp(-1.0))


def test_inadmissible_points_are_flagged():
    params = make_params(omega_p=0.01).with_decays(gamma_3=0.0)
    table = transmission_spectrum(params, grid=[-1.0, 0.0, 1.0])
    assert set(table['flag']) == {PointFlag.INVALID.value}


def test_parallel_scan_matches_serial(monkeypatch, fig4):
    grid = scan_grid(-2.0, 2.0, 0.05)
    serial = transmission_spectrum(fig4, grid=grid)
    monkeypatch.setenv('PHASESWITCH_WORKERS', '4')
    parallel = transmission_spectrum(fig4, grid=grid)
    pd.testing.assert_frame_equal(serial, parallel)


def test_map_ordered_keeps_input_order():
    assert map_ordered(lambda x: x * x, range(20), num_workers=4) == [x * x for x in range(20)]
    assert map_ordered(str, [], num_workers=3) == []


def test_empty_medium_emits_no_fluorescence(fig4):
    params = fig4.with_medium(k13_ell=0.0, k14_ell=0.0)
    table = fluorescence_spectrum(params, grid=[-1.0, 0.0, 1.0])
    assert list(table['fluorescence']) == [0.0, 0.0, 0.0]


def test_dark_medium_emits_no_fluorescence():
    params = make_params(omega_p=0.01, omega_c=0.01, gamma_2=0.0)
    vector = np.array(params.fields.weak_input)
    assert fluorescence_integral(params, vector) < 1e-20


def test_fluorescence_dip_at_dark_resonance(fig4):
    omega = fig4.fields.coupling_strength
    table = fluorescence_spectrum(fig4, grid=[-omega / 2, 0.0, omega / 2])
    assert list(table.columns) == ['delta', 'fluorescence', 'flag']
    values = list(table['fluorescence'])
    assert values[1] < values[0]
    assert values[1] < values[2]


def test_fluorescence_scales_with_detection_factor(fig4):
    vector = np.array(fig4.fields.weak_input)
    base = fluorescence_integral(fig4.at_scan_point(0.4), vector)
    scaled = fluorescence_integral(fig4.at_scan_point(0.4).with_medium(fluorescence_scale=3.0), vector)
    assert scaled == pytest.approx(3.0 * base)


def test_populations_spectrum(fig4):
    table = populations_spectrum(fig4, grid=scan_grid(-1.0, 1.0, 0.25))
    assert list(table.columns) == ['delta', 'p3', 'p4', 'fluorescence_density', 'flag']
    np.testing.assert_allclose(table['fluorescence_density'], 2.0 * table['p3'] + 2.0 * table['p4'], rtol=1e-12)
    assert (table['flag'] == '').all()
