import cmath
import math

import pytest

from helpers import make_params, random_complex
from phaseswitch.atoms.coherences import (adiabatic_populations, complex_detunings, fluorescence_density,
                                          interference_condition, scattering_rate, solve_amplitudes,
                                          steady_coherences)
from phaseswitch.atoms.schema import InterferenceKind, SteadyCoherences
from phaseswitch.exceptions import DomainError, InvalidParametersError, SingularityError


def test_complex_detunings():
    dp, d1, dc = complex_detunings(make_params(delta_p=2.0, delta_1=0.5, gamma_2=0.02, gamma_4=0.7))
    assert dp == complex(2.0, 1.0)
    assert d1 == complex(1.5, 0.02)
    assert dc == complex(1.5, 0.7)


def test_probe_alone_on_resonance():
    coherences = steady_coherences(make_params(omega_p=0.05, omega_c=0.0))
    assert abs(coherences.lambda_det) == pytest.approx(2.02)
    assert coherences.p3 == pytest.approx((0.05 * 1.02 / 2.02) ** 2, rel=1e-12)


def test_anti_phase_control_doubles_the_excitation():
    coherences = steady_coherences(make_params(omega_p=0.05, omega_c=cmath.rect(0.05, math.pi)))
    assert coherences.p3 == pytest.approx(2.5e-3, rel=1e-12)
    assert coherences.p4 == pytest.approx(2.5e-3, rel=1e-12)


def test_dark_state_without_ground_decay():
    coherences = steady_coherences(make_params(omega_p=0.05, omega_c=0.05, gamma_2=0.0))
    assert coherences.p3 < 1e-30
    assert coherences.p4 < 1e-30
    assert fluorescence_density(make_params(omega_p=0.05, omega_c=0.05, gamma_2=0.0)) < 1e-29


def _cancellation(first: complex, second: complex) -> float:
    return abs(first + second) / (abs(first) + abs(second))


def test_resonant_populations_match_closed_form(rng):
    for _ in range(1000):
        params = make_params(
            omega_p=random_complex(rng, 0.0, 0.1),
            omega_c=random_complex(rng, 0.0, 0.1),
            omega_1=random_complex(rng, 0.1, 5.0),
            omega_2=random_complex(rng, 0.1, 5.0),
            gamma_2=float(rng.uniform(0.0, 0.1)),
            gamma_4=float(rng.uniform(0.5, 2.0)),
        )
        coherences = steady_coherences(params)
        p3, p4 = adiabatic_populations(params)
        f = params.fields
        g = params.decays
        denominator = g.gamma_2 * g.gamma_3 * g.gamma_4 + g.gamma_3 * f.omega_2.amplitude ** 2 \
            + g.gamma_4 * f.omega_1.amplitude ** 2
        scale_3 = ((f.omega_p.amplitude * (f.omega_2.amplitude ** 2 + g.gamma_2 * g.gamma_4)
                    + f.omega_1.amplitude * f.omega_2.amplitude * f.omega_c.amplitude) / denominator) ** 2
        scale_4 = ((f.omega_c.amplitude * (f.omega_1.amplitude ** 2 + g.gamma_2 * g.gamma_3)
                    + f.omega_1.amplitude * f.omega_2.amplitude * f.omega_p.amplitude) / denominator) ** 2
        assert abs(coherences.p3 - p3) <= 1e-12 * p3 + 1e-13 * scale_3
        assert abs(coherences.p4 - p4) <= 1e-12 * p4 + 1e-13 * scale_4


def test_populations_scale_quadratically_with_weak_fields(rng):
    for _ in range(50):
        params = make_params(omega_p=random_complex(rng, 0.01, 0.1), omega_c=random_complex(rng, 0.01, 0.1),
                             omega_1=random_complex(rng, 0.5, 3.0), omega_2=random_complex(rng, 0.5, 3.0),
                             delta_p=float(rng.uniform(-2, 2)))
        s = 2.0 * cmath.exp(0.3j)
        omega_p, omega_c = params.fields.weak_input
        base = steady_coherences(params)
        scaled = steady_coherences(params.with_weak(s * omega_p, s * omega_c))
        assert scaled.p3 == pytest.approx(4.0 * base.p3, rel=1e-10)
        assert scaled.p4 == pytest.approx(4.0 * base.p4, rel=1e-10)


def test_populations_depend_on_phases_only_through_interference_phase(rng):
    for _ in range(50):
        values = [random_complex(rng, 0.01, 0.1), random_complex(rng, 0.01, 0.1),
                  random_complex(rng, 0.5, 3.0), random_complex(rng, 0.5, 3.0)]
        shift = cmath.exp(1j * float(rng.uniform(-math.pi, math.pi)))
        base = steady_coherences(make_params(*values, delta_p=0.4))
        shifted = steady_coherences(make_params(*(v * shift for v in values), delta_p=0.4))
        assert shifted.p3 == pytest.approx(base.p3, rel=1e-9)
        assert shifted.p4 == pytest.approx(base.p4, rel=1e-9)

        # advancing the control and coupling 2 together leaves φp − φ₁ + φ₂ − φc unchanged
        omega_p, omega_c, omega_1, omega_2 = values
        twisted = steady_coherences(make_params(omega_p, omega_c * shift, omega_1, omega_2 * shift, delta_p=0.4))
        assert twisted.p3 == pytest.approx(base.p3, rel=1e-9)


def test_singular_point_reports_parameters():
    params = make_params(omega_1=0.0, omega_2=0.0, gamma_2=0.0)
    with pytest.raises(SingularityError) as excinfo:
        steady_coherences(params)
    assert excinfo.value.point['delta_p'] == 0.0
    assert excinfo.value.point['omega_1'] == 0.0


def test_steady_coherences_validate_first():
    with pytest.raises(InvalidParametersError):
        steady_coherences(make_params(delta_p=0.2, delta_c=0.0))


def test_solve_amplitudes_with_explicit_fields():
    params = make_params(omega_p=0.05, omega_c=0.0)
    explicit = solve_amplitudes(params, omega_p=0.05, omega_c=0.0)
    assert explicit.a3 == steady_coherences(params).a3


@pytest.mark.parametrize("omega_c, kind", [
    (0.05, InterferenceKind.DESTRUCTIVE),
    (-0.05, InterferenceKind.CONSTRUCTIVE),
    (0.05j, InterferenceKind.INTERMEDIATE),
])
def test_interference_condition(omega_c, kind):
    fields = make_params(omega_p=0.05, omega_c=omega_c).fields
    assert interference_condition(fields).kind is kind


def test_interference_condition_without_weak_fields_is_intermediate():
    condition = interference_condition(make_params(omega_p=0.0, omega_c=0.0).fields)
    assert condition.kind is InterferenceKind.INTERMEDIATE
    assert condition.residual == 0


def test_interference_condition_needs_couplings():
    with pytest.raises(DomainError):
        interference_condition(make_params(omega_2=0.0).fields)


def test_interference_condition_matches_dark_point(rng):
    for _ in range(50):
        omega_1 = random_complex(rng, 0.5, 3.0)
        omega_2 = random_complex(rng, 0.5, 3.0)
        omega_p = random_complex(rng, 0.01, 0.1)
        omega_c = omega_2 * omega_p / omega_1
        params = make_params(omega_p, omega_c, omega_1, omega_2, gamma_2=0.0)
        assert interference_condition(params.fields).kind is InterferenceKind.DESTRUCTIVE
        coherences = steady_coherences(params)
        assert coherences.p3 < 1e-24
        assert coherences.p4 < 1e-24


def test_scattering_rate_is_linear_in_populations():
    params = make_params(gamma_4=0.5)
    coherences = SteadyCoherences(a2=0j, a3=0.01 + 0j, a4=0.01 + 0j, p3=1e-4, p4=1e-4, lambda_det=1 + 0j)
    assert scattering_rate(params, coherences) == pytest.approx(2e-4 + 1e-4)


def test_fluorescence_dip_at_dark_resonance(fig4):
    omega = fig4.fields.coupling_strength
    at_zero = fluorescence_density(fig4.at_scan_point(0.0))
    for delta in (-omega / 2, omega / 2):
        assert at_zero < fluorescence_density(fig4.at_scan_point(delta))
