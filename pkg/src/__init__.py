"""
qinvar - invariant information toolkit for qudits

Mutually unbiased bases in prime-power dimensions, invariant information by
MUB outcome sums and by purity, tangle and complementarity relations,
purification bounds on the information gap, and qubit decoherence channels.
"""

__version__ = "1.0.0"
__author__ = "qinvar developers"

# Finite fields
from .gf import Field, FieldElement, add, field_new, inv, mul, trace

# Linear algebra
from .qlinalg import (
    basis_state,
    density_from_pure,
    maximally_mixed,
    partial_trace,
    pure_state,
    purify,
    purity,
    reduced_states,
    spectrum,
    tensor,
)

# Mutually unbiased bases
from .mub import build_mubs, dump_mubs, projectors, verify_mubs

# Invariant information
from .invinfo import (
    additivity_probe,
    invariant_info_closed,
    invariant_info_mub,
    invariant_info_qubits,
    local_informations,
    mutual_gap,
    probabilities,
)

# Entanglement and complementarity
from .entangle import (
    conjecture9_gap,
    haar_pure_state,
    info_gap_report,
    isotropic_fidelity,
    isotropic_info_closed,
    isotropic_state,
    isotropic_tangle_d3,
    maximally_entangled,
    mixed_complementarity_defect,
    mixed_tangle,
    pure_complementarity_residual,
    pure_tangle,
    subadditivity_counterexample,
)

# Decoherence channels
from .channels import (
    apply_channel,
    apply_kraus,
    decoherence_minimum,
    kraus_operators,
    local_info_after_channel,
    local_info_depolarized_closed,
    superposition_state,
)

# Sweeps and verification suites
from .sweeps import decoherence_grid, decoherence_sweep, isotropic_grid, isotropic_sweep
from .verify import SUITE_NAMES, run_suite

# Validation
from .validator import validate_channel_spec, validate_density_matrix, validate_grid, validate_pure_state

# Types and errors
from .state_types import (
    AdditivityReport,
    BoundViolationError,
    MissingDependencyError,
    ChannelKind,
    ChannelSpec,
    CheckResult,
    ConjectureProbe,
    DensityMatrix,
    DimensionError,
    DomainError,
    FieldError,
    GapReport,
    GridAxis,
    InfoResult,
    InvalidStateError,
    IsotropicParams,
    MubReport,
    MubSet,
    PureState,
    QinvarError,
    RunOptions,
    Spectrum,
    SuiteReport,
    SweepGrid,
    ValidationError,
    ValidationResult,
)

# Result sinks
from .adapters import (
    BaseResultAdapter,
    CSVFileAdapter,
    ExcelFileAdapter,
    JSONFileAdapter,
    adapter_for_path,
    get_adapter,
    register_adapter,
)

__all__ = [
    # Finite fields
    "Field",
    "FieldElement",
    "field_new",
    "add",
    "mul",
    "inv",
    "trace",
    # Linear algebra
    "pure_state",
    "basis_state",
    "maximally_mixed",
    "density_from_pure",
    "partial_trace",
    "tensor",
    "purity",
    "purify",
    "spectrum",
    "reduced_states",
    # Mutually unbiased bases
    "build_mubs",
    "verify_mubs",
    "projectors",
    "dump_mubs",
    # Invariant information
    "probabilities",
    "invariant_info_mub",
    "invariant_info_closed",
    "invariant_info_qubits",
    "local_informations",
    "mutual_gap",
    "additivity_probe",
    # Entanglement and complementarity
    "maximally_entangled",
    "haar_pure_state",
    "pure_tangle",
    "isotropic_state",
    "isotropic_tangle_d3",
    "isotropic_info_closed",
    "isotropic_fidelity",
    "mixed_tangle",
    "pure_complementarity_residual",
    "mixed_complementarity_defect",
    "conjecture9_gap",
    "subadditivity_counterexample",
    "info_gap_report",
    # Decoherence channels
    "apply_channel",
    "apply_kraus",
    "kraus_operators",
    "superposition_state",
    "local_info_depolarized_closed",
    "local_info_after_channel",
    "decoherence_minimum",
    # Sweeps and suites
    "isotropic_grid",
    "decoherence_grid",
    "isotropic_sweep",
    "decoherence_sweep",
    "run_suite",
    "SUITE_NAMES",
    # Validation
    "validate_pure_state",
    "validate_density_matrix",
    "validate_channel_spec",
    "validate_grid",
    # Types and errors
    "PureState",
    "DensityMatrix",
    "Spectrum",
    "MubSet",
    "MubReport",
    "InfoResult",
    "AdditivityReport",
    "IsotropicParams",
    "GapReport",
    "ConjectureProbe",
    "ChannelKind",
    "ChannelSpec",
    "GridAxis",
    "SweepGrid",
    "CheckResult",
    "SuiteReport",
    "RunOptions",
    "ValidationError",
    "ValidationResult",
    "QinvarError",
    "InvalidStateError",
    "DimensionError",
    "FieldError",
    "DomainError",
    "BoundViolationError",
    "MissingDependencyError",
    # Result sinks
    "BaseResultAdapter",
    "CSVFileAdapter",
    "JSONFileAdapter",
    "ExcelFileAdapter",
    "get_adapter",
    "register_adapter",
    "adapter_for_path",
]
