from __future__ import annotations

import math
from typing import TYPE_CHECKING

from phaseswitch.exceptions import DomainError, UndefinedPhaseError

if TYPE_CHECKING:
    from phaseswitch.model.schema import FieldSet

TWO_PI = 2.0 * math.pi

# Results within this many radians of −π are folded onto +π.
_BOUNDARY_TOLERANCE = 1e-12


def normalize_phase(phase: float) -> float:
    """
    Map a phase onto its representative in the half-open interval (−π, π].

    Args:
        phase (float): Phase in radians.

    Returns:
        float: The equivalent phase modulo 2π in (−π, π].

    Raises:
        DomainError: If the phase is not finite.
    """
    if not math.isfinite(phase):
        raise DomainError(f"Phase must be finite, got {phase!r}")
    reduced = math.remainder(phase, TWO_PI)
    if reduced <= -math.pi + _BOUNDARY_TOLERANCE * max(1.0, abs(phase)):
        reduced += TWO_PI
    return min(reduced, math.pi)


def _require_amplitudes(fields: FieldSet) -> None:
    for name in ("omega_p", "omega_c", "omega_1", "omega_2"):
        if getattr(fields, name).amplitude <= 0.0:
            raise UndefinedPhaseError(f"Loop phase is undefined: {name} has zero amplitude")


def loop_phase(fields: FieldSet) -> float:
    """
    Loop phase Φ = φ₂ + φ_c − φ₁ − φ_p of the four-field loop.

    Raises:
        UndefinedPhaseError: If any of the four amplitudes is zero.
    """
    _require_amplitudes(fields)
    return normalize_phase(
        fields.omega_2.phase + fields.omega_c.phase - fields.omega_1.phase - fields.omega_p.phase)


def interference_phase(fields: FieldSet) -> float:
    """
    Relative phase φ_p − φ₁ + φ₂ − φ_c of the one-photon and three-photon excitation paths.

    This is the combination that survives independent rephasing of each atomic level. It is the
    phase carried by the cross terms of the dressed-state transition probabilities, and it
    coincides with `loop_phase` whenever all four phases are 0 or π.

    Raises:
        UndefinedPhaseError: If any of the four amplitudes is zero.
    """
    _require_amplitudes(fields)
    return normalize_phase(
        fields.omega_p.phase - fields.omega_1.phase + fields.omega_2.phase - fields.omega_c.phase)


def circular_distance(a: float, b: float) -> float:
    """Smallest absolute angle between two phases, in [0, π]."""
    return abs(math.remainder(a - b, TWO_PI))


__all__ = [
    "TWO_PI",
    "normalize_phase",
    "loop_phase",
    "interference_phase",
    "circular_distance",
]
