import time
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

from phaseswitch.cli.main import EXIT_OK, main
from phaseswitch.experiments.presets import PRESETS
from phaseswitch.propagation.spectra import scan_grid, transmission_spectrum
from phaseswitch.propagation.transfer import integrate_transfer

DATA = Path(__file__).resolve().parent / 'data'
FIG2 = ['fig2a', 'fig2b', 'fig2c']


def _golden(name: str) -> pd.DataFrame:
    table = pd.read_csv(DATA / f'{name}.csv')
    table['flag'] = table['flag'].fillna('')
    return table


def _assert_matches(table: pd.DataFrame, golden: pd.DataFrame):
    assert list(table.columns) == list(golden.columns)
    assert len(table) == len(golden)
    np.testing.assert_allclose(table['delta'], golden['delta'], rtol=0, atol=1e-9)
    for column in ('transmission_p', 'transmission_c'):
        np.testing.assert_allclose(table[column], golden[column], rtol=1e-6, equal_nan=True)
    assert list(table['flag'].fillna('')) == list(golden['flag'])


@pytest.mark.parametrize("name", FIG2)
def test_spectrum_matches_archive(name):
    scenario = PRESETS[name]
    table = transmission_spectrum(scenario.params, grid=scan_grid(*scenario.grid))
    _assert_matches(table, _golden(name))


@pytest.mark.parametrize("name", FIG2)
def test_cli_spectrum_matches_archive(tmp_path, name):
    out = tmp_path / f'{name}.csv'
    assert main(['spectrum', '--scenario', name, '--out', str(out)]) == EXIT_OK
    table = pd.read_csv(out)
    table['flag'] = table['flag'].fillna('')
    _assert_matches(table, _golden(name))


@pytest.mark.parametrize("name", FIG2)
def test_ode_integration_reproduces_archive(name):
    params = PRESETS[name].params
    golden = _golden(name)
    vector = np.array(params.fields.weak_input)
    for row in golden.iloc[::40].itertuples():
        output = integrate_transfer(params.at_scan_point(row.delta))
        assert abs(output[0] / vector[0]) ** 2 == pytest.approx(row.transmission_p, rel=1e-6)
        if vector[1] != 0:
            assert abs(output[1] / vector[1]) ** 2 == pytest.approx(row.transmission_c, rel=1e-6)


def test_fig2_spectra_run_quickly():
    started = time.perf_counter()
    for name in FIG2:
        scenario = PRESETS[name]
        table = transmission_spectrum(scenario.params, grid=scan_grid(*scenario.grid))
        assert len(table) == 801
    assert time.perf_counter() - started < 5.0
