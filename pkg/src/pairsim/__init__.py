"""pairsim: a pair-based quantum state-vector simulator.

Single-qubit gates act on amplitude pairs whose outcome indices differ
only at the target bit; every kernel here is built around enumerating
those pairs cheaply and updating them with gate-specific arithmetic.
"""

__version__ = "0.1.0"

from .config import get_precision, set_precision, use_precision
from .state import CapacityError, State, init_state
from .gates import (
    Gate,
    QuantumTransformation,
    apply,
    apply_controlled,
    apply_general,
    apply_h,
    apply_p,
    apply_rz,
    apply_x,
    apply_y,
    apply_z,
)
from .circuit import QuantumCircuit, QuantumRegister, apply_iqft, iqft_transformations
from .sampling import SampleSet, get_samples, inverse_cdf_samples
from .bench import BenchConfig, BenchReport, build_qcbm, build_value_encoding

__all__ = [
    "__version__",
    "BenchConfig",
    "BenchReport",
    "CapacityError",
    "Gate",
    "QuantumCircuit",
    "QuantumRegister",
    "QuantumTransformation",
    "SampleSet",
    "State",
    "apply",
    "apply_controlled",
    "apply_general",
    "apply_h",
    "apply_iqft",
    "apply_p",
    "apply_rz",
    "apply_x",
    "apply_y",
    "apply_z",
    "build_qcbm",
    "build_value_encoding",
    "get_precision",
    "get_samples",
    "init_state",
    "inverse_cdf_samples",
    "iqft_transformations",
    "set_precision",
    "use_precision",
]
