import math

import pytest

from phaseswitch.exceptions import DomainError, UndefinedPhaseError
from phaseswitch.model.phase import circular_distance, interference_phase, loop_phase, normalize_phase
from phaseswitch.model.schema import ComplexRabi, FieldSet


def fields(phi_p=0.0, phi_c=0.0, phi_1=0.0, phi_2=0.0, amplitude=1.0) -> FieldSet:
    return FieldSet(
        omega_p=ComplexRabi(amplitude=amplitude, phase=phi_p),
        omega_c=ComplexRabi(amplitude=amplitude, phase=phi_c),
        omega_1=ComplexRabi(amplitude=amplitude, phase=phi_1),
        omega_2=ComplexRabi(amplitude=amplitude, phase=phi_2),
    )


def test_normalize_phase_values():
    assert normalize_phase(0.0) == 0.0
    assert normalize_phase(3 * math.pi) == pytest.approx(math.pi, abs=1e-12)
    assert normalize_phase(-math.pi) == math.pi
    assert normalize_phase(math.pi) == math.pi
    assert normalize_phase(-3 * math.pi / 2) == pytest.approx(math.pi / 2)


@pytest.mark.parametrize("value", [math.nan, math.inf, -math.inf])
def test_normalize_phase_rejects_non_finite(value):
    with pytest.raises(DomainError):
        normalize_phase(value)


def test_normalize_phase_is_idempotent_and_in_range(rng):
    for x in rng.uniform(-200.0, 200.0, size=2000):
        y = normalize_phase(float(x))
        assert -math.pi < y <= math.pi
        assert normalize_phase(y) == y
        assert circular_distance(x, y) < 1e-9


def test_loop_phase_values():
    assert loop_phase(fields()) == 0.0
    assert loop_phase(fields(phi_c=math.pi)) == pytest.approx(math.pi)
    assert loop_phase(fields(phi_1=math.pi / 2, phi_2=math.pi, phi_p=math.pi / 2)) == pytest.approx(0.0, abs=1e-12)


def test_loop_phase_needs_all_amplitudes():
    f = fields().model_copy(update={'omega_c': ComplexRabi()})
    with pytest.raises(UndefinedPhaseError):
        loop_phase(f)
    with pytest.raises(UndefinedPhaseError):
        interference_phase(f)


def test_loop_phase_global_shift_and_control_shift(rng):
    for _ in range(200):
        phases = rng.uniform(-math.pi, math.pi, size=4)
        base = fields(*phases)
        shift = float(rng.uniform(-10, 10))
        shifted = fields(*(phases + shift))
        assert circular_distance(loop_phase(shifted), loop_phase(base)) < 1e-9

        delta = float(rng.uniform(-10, 10))
        advanced = fields(phases[0], phases[1] + delta, phases[2], phases[3])
        assert circular_distance(loop_phase(advanced), loop_phase(base) + delta) < 1e-9


def test_interference_phase_matches_loop_phase_for_real_fields():
    for phi_p in (0.0, math.pi):
        for phi_c in (0.0, math.pi):
            for phi_2 in (0.0, math.pi):
                f = fields(phi_p=phi_p, phi_c=phi_c, phi_2=phi_2)
                assert circular_distance(interference_phase(f), loop_phase(f)) < 1e-12


def test_circular_distance_wraps():
    assert circular_distance(-math.pi, math.pi) == pytest.approx(0.0, abs=1e-15)
    assert circular_distance(0.1, -0.1) == pytest.approx(0.2)
    assert circular_distance(3.0, -3.0) == pytest.approx(2 * math.pi - 6.0)
