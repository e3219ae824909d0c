import math
import os
import subprocess
import sys
from pathlib import Path

import pytest
from pydantic import ValidationError

from helpers import make_params
from phaseswitch.exceptions import DomainError, InvalidParametersError
from phaseswitch.experiments.presets import PRESETS
from phaseswitch.model.schema import ComplexRabi, Detunings
from phaseswitch.model.units import UnitMode, from_gamma3, gamma3_to_mhz, mhz_to_gamma3, to_gamma3
from phaseswitch.model.validation import ensure_valid, validate


def test_complex_rabi_value_and_normalized_phase():
    omega = ComplexRabi(amplitude=2.0, phase=3 * math.pi / 2)
    assert omega.phase == pytest.approx(-math.pi / 2)
    assert omega.value == pytest.approx(-2j)
    assert ComplexRabi.from_complex(-0.5).phase == math.pi
    assert ComplexRabi.from_complex(0).amplitude == 0.0


def test_complex_rabi_rejects_negative_and_non_finite():
    with pytest.raises(ValidationError):
        ComplexRabi(amplitude=-1.0)
    with pytest.raises(ValidationError):
        ComplexRabi(amplitude=math.inf)
    with pytest.raises(ValidationError):
        ComplexRabi(amplitude=1.0, phase=math.nan)


def test_params_are_immutable(fig4):
    with pytest.raises(ValidationError):
        fig4.decays.gamma_2 = 0.5
    shifted = fig4.with_decays(gamma_2=0.5)
    assert shifted.decays.gamma_2 == 0.5
    assert fig4.decays.gamma_2 == 0.02


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_presets_are_admissible(name):
    report = validate(PRESETS[name].params)
    assert report.ok
    assert report.warnings == []


def test_closure_violation_is_reported():
    params = make_params(delta_p=0.1, delta_c=0.0)
    report = validate(params)
    assert not report.ok
    assert report.violations[0].field == 'detunings'
    with pytest.raises(InvalidParametersError) as excinfo:
        ensure_valid(params)
    assert excinfo.value.report.violations[0].field == 'detunings'


def test_closure_within_tolerance_is_accepted():
    assert validate(make_params(delta_p=0.3, delta_1=0.1, delta_c=0.2 + 1e-13)).ok


@pytest.mark.parametrize("changes, field", [
    ({'gamma_3': 0.0}, 'decays.gamma_3'),
    ({'gamma_4': -1.0}, 'decays.gamma_4'),
    ({'gamma_2': -0.01}, 'decays.gamma_2'),
])
def test_decay_violations(changes, field):
    report = validate(make_params().with_decays(**changes))
    assert [v.field for v in report.violations] == [field]


def test_medium_violations():
    report = validate(make_params().with_medium(k13_ell=-1.0, n_slices=0, omega_ratio=0.0))
    assert {v.field for v in report.violations} == {'medium.k13_ell', 'medium.n_slices', 'medium.omega_ratio'}


def test_large_ground_decay_warns_but_is_admissible():
    report = validate(make_params(gamma_2=0.2))
    assert report.ok
    assert len(report.warnings) == 1
    assert report.lines() == [f"warning: {report.warnings[0]}"]


def test_scanned_detunings_keep_closure():
    detunings = Detunings(delta_p=0.0, delta_1=0.3, delta_c=-0.1, delta_2=0.2)
    for delta in (-2.5, 0.0, 1.75):
        scanned = detunings.scanned(delta)
        assert scanned.delta_p == delta
        assert scanned.delta_1 == 0.3
        assert scanned.is_closed


def test_unit_conversion():
    assert mhz_to_gamma3(5.4, 5.4) == 1.0
    assert mhz_to_gamma3(4.0, 5.4) == pytest.approx(4.0 / 5.4)
    assert gamma3_to_mhz(2.0, 5.4) == pytest.approx(10.8)
    assert to_gamma3(2.7, UnitMode.MHZ, 5.4) == pytest.approx(0.5)
    assert to_gamma3(2.7, UnitMode.GAMMA3) == 2.7
    assert from_gamma3(0.5, UnitMode.MHZ, 5.4) == pytest.approx(2.7)
    assert UnitMode.from_name(' MHz ') is UnitMode.MHZ
    with pytest.raises(ValueError):
        UnitMode.from_name('ghz')


def test_gamma3_from_environment(monkeypatch):
    monkeypatch.setenv('PHASESWITCH_GAMMA3_MHZ', '6.0')
    assert mhz_to_gamma3(3.0) == pytest.approx(0.5)
    monkeypatch.setenv('PHASESWITCH_GAMMA3_MHZ', '-1')
    with pytest.raises(DomainError):
        mhz_to_gamma3(3.0)


def test_schema_modules_use_current_pydantic_configuration():
    root = Path(__file__).resolve().parents[1]
    env = {**os.environ, 'PYTHONPATH': str(root) + os.pathsep + os.environ.get('PYTHONPATH', '')}
    modules = ['phaseswitch.model.schema', 'phaseswitch.atoms.schema', 'phaseswitch.propagation.schema',
               'phaseswitch.experiments.schema', 'phaseswitch.model.validation', 'phaseswitch.cli.config_file']
    completed = subprocess.run(
        [sys.executable, '-W', 'error::pydantic.warnings.PydanticDeprecatedSince20', '-c',
         '; '.join(f'import {module}' for module in modules)],
        cwd=root, env=env, capture_output=True, text=True)
    assert completed.returncode == 0, completed.stderr
