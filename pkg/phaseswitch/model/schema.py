import cmath
import math

from pydantic import BaseModel, ConfigDict, Field, field_validator

from phaseswitch.model.phase import normalize_phase

# Multiphoton closure tolerance, in γ₃ units.
CLOSURE_TOLERANCE = 1e-12


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True, allow_inf_nan=False, extra='forbid')


class ComplexRabi(_Frozen):
    """
    A complex Rabi frequency Ω = |Ω|·e^{iφ} in units of γ₃.

    Attributes:
        amplitude (float): |Ω| in units of γ₃.
        phase (float): φ in radians, stored in (−π, π].
    """
    amplitude: float = Field(default=0.0, ge=0.0, description="Rabi amplitude in units of gamma_3")
    phase: float = Field(default=0.0, description="Phase in radians, normalized to (-pi, pi]")

    @field_validator('phase')
    @classmethod
    def _normalize(cls, value: float) -> float:
        return normalize_phase(value)

    @property
    def value(self) -> complex:
        return self.amplitude * cmath.exp(1j * self.phase)

    @classmethod
    def from_complex(cls, value: complex) -> "ComplexRabi":
        value = complex(value)
        return cls(amplitude=abs(value), phase=cmath.phase(value) if value != 0 else 0.0)

    def shifted(self, delta_phase: float) -> "ComplexRabi":
        return ComplexRabi(amplitude=self.amplitude, phase=self.phase + delta_phase)


class FieldSet(_Frozen):
    """
    The four laser fields of the double-Λ loop.

    Attributes:
        omega_p: Probe, driving |1⟩-|3⟩.
        omega_c: Control, driving |1⟩-|4⟩.
        omega_1: Coupling 1, driving |2⟩-|3⟩.
        omega_2: Coupling 2, driving |2⟩-|4⟩.
    """
    omega_p: ComplexRabi = Field(default_factory=ComplexRabi, description="Probe field |1>-|3>")
    omega_c: ComplexRabi = Field(default_factory=ComplexRabi, description="Control field |1>-|4>")
    omega_1: ComplexRabi = Field(default_factory=ComplexRabi, description="Coupling field |2>-|3>")
    omega_2: ComplexRabi = Field(default_factory=ComplexRabi, description="Coupling field |2>-|4>")

    @property
    def weak_input(self) -> tuple[complex, complex]:
        """The weak-field pair (Ωp, Ωc) as complex numbers."""
        return self.omega_p.value, self.omega_c.value

    @property
    def coupling_strength(self) -> float:
        """Ω = √(|Ω₁|² + |Ω₂|²)."""
        return math.hypot(self.omega_1.amplitude, self.omega_2.amplitude)

    def with_weak(self, omega_p: complex, omega_c: complex) -> "FieldSet":
        return self.model_copy(update={
            'omega_p': ComplexRabi.from_complex(omega_p),
            'omega_c': ComplexRabi.from_complex(omega_c),
        })

    def with_control_shift(self, delta_phase: float) -> "FieldSet":
        """Return the field set with the control phase advanced by `delta_phase`."""
        return self.model_copy(update={'omega_c': self.omega_c.shifted(delta_phase)})


class Detunings(_Frozen):
    """
    Laser detunings in units of γ₃.

    Attributes:
        delta_p: Δp = ω_p − ω₃₁.
        delta_1: Δ₁ = ω₁ − ω₃₂.
        delta_c: Δc = ω_c − ω₄₁.
        delta_2: Δ₂ = ω₂ − ω₄₂.
    """
    delta_p: float = 0.0
    delta_1: float = 0.0
    delta_c: float = 0.0
    delta_2: float = 0.0

    @property
    def closure_residual(self) -> float:
        """r = (Δp − Δ₁) − (Δc − Δ₂); a time-independent steady state needs r = 0."""
        return (self.delta_p - self.delta_1) - (self.delta_c - self.delta_2)

    @property
    def is_closed(self) -> bool:
        return abs(self.closure_residual) < CLOSURE_TOLERANCE

    def scanned(self, delta: float) -> "Detunings":
        """
        Detunings for a weak-laser scan point: Δp = Δ and Δc = Δ − Δ₁ + Δ₂, couplings fixed.
        """
        return self.model_copy(update={
            'delta_p': delta,
            'delta_c': delta - self.delta_1 + self.delta_2,
        })


class Decays(_Frozen):
    """
    Relaxation rates in units of γ₃.

    Attributes:
        gamma_2: Decay rate of the ground-state coherence ρ₁₂.
        gamma_3: Half-width of the |1⟩-|3⟩ coherence (1 by normalization).
        gamma_4: Half-width of the |1⟩-|4⟩ coherence.
    """
    gamma_2: float = 0.0
    gamma_3: float = 1.0
    gamma_4: float = 1.0


class Medium(_Frozen):
    """
    Optical properties of the atomic sample.

    Attributes:
        k13_ell: K₁₃·ℓ in units of γ₃ (the caption ratio K₁₃ℓ/γ₃ times γ₃).
        k14_ell: K₁₄·ℓ in units of γ₃.
        n_slices: Number of slices used for fluorescence integrals along z.
        omega_ratio: ω_c/ω_p.
        cross_coupling: When False each weak field propagates alone, as when the other laser is absent.
        fluorescence_scale: Proportionality between scattering rate and detected counts.
    """
    k13_ell: float = 0.0
    k14_ell: float = 0.0
    n_slices: int = 50
    omega_ratio: float = 1.0
    cross_coupling: bool = True
    fluorescence_scale: float = 1.0


class SystemParams(_Frozen):
    """Every symbol entering the steady-state and propagation formulas."""
    fields: FieldSet = Field(default_factory=FieldSet)
    detunings: Detunings = Field(default_factory=Detunings)
    decays: Decays = Field(default_factory=Decays)
    medium: Medium = Field(default_factory=Medium)

    def with_fields(self, fields: FieldSet) -> "SystemParams":
        return self.model_copy(update={'fields': fields})

    def with_weak(self, omega_p: complex, omega_c: complex) -> "SystemParams":
        return self.with_fields(self.fields.with_weak(omega_p, omega_c))

    def with_detunings(self, **changes: float) -> "SystemParams":
        return self.model_copy(update={'detunings': self.detunings.model_copy(update=changes)})

    def with_decays(self, **changes: float) -> "SystemParams":
        return self.model_copy(update={'decays': self.decays.model_copy(update=changes)})

    def with_medium(self, **changes) -> "SystemParams":
        return self.model_copy(update={'medium': self.medium.model_copy(update=changes)})

    def at_scan_point(self, delta: float) -> "SystemParams":
        return self.model_copy(update={'detunings': self.detunings.scanned(delta)})


__all__ = [
    "CLOSURE_TOLERANCE",
    "ComplexRabi",
    "FieldSet",
    "Detunings",
    "Decays",
    "Medium",
    "SystemParams",
]
