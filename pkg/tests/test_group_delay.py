import math

import pytest

from helpers import make_params
from phaseswitch.exceptions import StepTooLargeError
from phaseswitch.propagation.group_delay import group_delay, velocity_formulas


def test_empty_medium_has_no_delay(fig2b):
    result = group_delay(fig2b.with_medium(k13_ell=0.0, k14_ell=0.0))
    assert result.tau_p == pytest.approx(0.0, abs=1e-12)
    assert result.tau_c == pytest.approx(0.0, abs=1e-12)


def test_symmetric_medium_delays_both_fields_equally():
    result = group_delay(make_params(omega_p=0.01, omega_c=0.01))
    assert result.tau_p == pytest.approx(result.tau_c, rel=1e-9)
    assert result.matched


def test_transparency_window_slows_the_probe(fig2b):
    result = group_delay(fig2b)
    # dark-mode phase slope (2.02 − 0.0204)/2.02² at resonance
    assert result.tau_p == pytest.approx(0.49, abs=0.02)
    assert result.tau_p > 0


def test_missing_field_has_no_delay(fig2a):
    result = group_delay(fig2a)
    assert result.tau_c is None
    assert result.tau_p is not None


def test_coarse_step_is_rejected(fig2b):
    with pytest.raises(StepTooLargeError):
        group_delay(fig2b.with_medium(k13_ell=50.0, k14_ell=50.0), step=0.05)


def test_step_must_be_positive(fig2b):
    with pytest.raises(ValueError):
        group_delay(fig2b, step=0.0)


def test_velocity_formulas():
    params = make_params(k13_ell=1.0, k14_ell=2.0)
    vg_p, vg_c, matched = velocity_formulas(params)
    assert vg_p == pytest.approx(0.5)
    assert vg_c == pytest.approx(1.0)
    assert not matched
    assert velocity_formulas(params.with_medium(omega_ratio=0.5))[2]


def test_velocity_formulas_without_couplings():
    vg_p, vg_c, _ = velocity_formulas(make_params(omega_1=0.0, omega_2=0.0))
    assert math.isinf(vg_p) and math.isinf(vg_c)
