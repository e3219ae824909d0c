from .phase import normalize_phase, loop_phase, interference_phase, circular_distance
from .schema import ComplexRabi, FieldSet, Detunings, Decays, Medium, SystemParams
from .units import UnitMode, mhz_to_gamma3, gamma3_to_mhz
from .validation import ValidationReport, Violation, validate, ensure_valid
