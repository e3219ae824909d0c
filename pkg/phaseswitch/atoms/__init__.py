from .coherences import (complex_detunings, steady_coherences, adiabatic_populations, interference_condition,
                         fluorescence_density)
from .dressed import dressed_basis, transition_probabilities
from .lindblad import build_model, liouvillian, apply_liouvillian, steady_state, weak_field_response
from .schema import (SteadyCoherences, InterferenceKind, InterferenceCondition, DressedBasis, TransitionProbabilities,
                     GroundDecay, LindbladModel, DensityMatrix, WeakFieldResponse)
