# state_types.py
# Type definitions, dataclasses and errors for qinvar
# Author: qinvar developers

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

import numpy as np

# Type aliases
ChannelKind = Literal["depolarization", "dephasing", "dissipation"]
InfoMethod = Literal["mub-sum", "closed-form", "qubit-closed-form"]
TangleMethod = Literal["pure", "isotropic-d3", "reduced-purity-surrogate"]
ConstructionTag = Literal["quadratic-prime", "quadratic-galois", "pauli-classes", "custom"]
OutputFormat = Literal["csv", "json", "xlsx"]

CHANNEL_KINDS: Tuple[str, ...] = ("depolarization", "dephasing", "dissipation")


class QinvarError(ValueError):
    """Base class for every error raised by qinvar."""


class InvalidStateError(QinvarError):
    """A state or matrix violates its construction invariants."""

    def __init__(self, message: str, result: Optional["ValidationResult"] = None) -> None:
        super().__init__(message)
        self.result = result


class DimensionError(QinvarError):
    """Dimension, bipartition or subsystem index mismatch."""


class FieldError(QinvarError):
    """Finite-field construction or arithmetic error."""


class DomainError(QinvarError):
    """A parameter lies outside its domain."""


class BoundViolationError(QinvarError):
    """A bound that must hold for every valid input was violated."""


class MissingDependencyError(QinvarError):
    """An optional dependency needed for the requested output is not installed."""


def _serialize_value(val: Any) -> Any:
    """Helper to serialize values to JSON-friendly data structures."""
    if val is None:
        return None
    if hasattr(val, "to_dict"):
        return val.to_dict()
    if isinstance(val, np.ndarray):
        if np.iscomplexobj(val):
            return {"real": val.real.tolist(), "imag": val.imag.tolist()}
        return val.tolist()
    if isinstance(val, (np.floating, np.integer, np.bool_)):
        return val.item()
    if isinstance(val, (list, tuple)):
        return [_serialize_value(item) for item in val]
    if isinstance(val, dict):
        return {k: _serialize_value(v) for k, v in val.items() if v is not None}
    return val


def _complex_from_dict(data: Any) -> np.ndarray:
    if isinstance(data, dict):
        return np.asarray(data["real"], dtype=float) + 1j * np.asarray(data["imag"], dtype=float)
    return np.asarray(data, dtype=complex)


@dataclass
class ValidationError:
    """Represents a single validation error in a state, spec or grid"""

    path: str
    message: str
    code: str = "INVALID_STATE"


@dataclass
class ValidationResult:
    """Result of a validation pass"""

    is_valid: bool
    errors: List[ValidationError]
    warnings: List[str]

    def summary(self) -> str:
        return "; ".join(f"{e.path}: {e.message} [{e.code}]" for e in self.errors)


@dataclass
class PureState:
    """Normalized state vector with declared subsystem dimensions"""

    amplitudes: np.ndarray
    dims: List[int]

    def __post_init__(self) -> None:
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        self.dims = [int(d) for d in self.dims]
        from .validator import validate_pure_state

        result = validate_pure_state(self.amplitudes, self.dims)
        if not result.is_valid:
            raise InvalidStateError(f"Invalid pure state: {result.summary()}", result)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.shape[0])

    def to_dict(self) -> Dict[str, Any]:
        return {"amplitudes": _serialize_value(self.amplitudes), "dims": list(self.dims)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> PureState:
        return cls(amplitudes=_complex_from_dict(data["amplitudes"]), dims=data["dims"])


@dataclass
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix with subsystem dimensions"""

    entries: np.ndarray
    dims: List[int]

    def __post_init__(self) -> None:
        self.entries = np.asarray(self.entries, dtype=complex)
        self.dims = [int(d) for d in self.dims]
        from .validator import validate_density_matrix

        result = validate_density_matrix(self.entries, self.dims)
        if not result.is_valid:
            raise InvalidStateError(f"Invalid density matrix: {result.summary()}", result)

    @property
    def dim(self) -> int:
        return int(self.entries.shape[0])

    def to_dict(self) -> Dict[str, Any]:
        return {"entries": _serialize_value(self.entries), "dims": list(self.dims)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> DensityMatrix:
        return cls(entries=_complex_from_dict(data["entries"]), dims=data["dims"])

    def to_json(self, file_path: Optional[Union[str, Path]] = None, indent: int = 2) -> str:
        s = json.dumps(self.to_dict(), indent=indent)
        if file_path:
            Path(file_path).write_text(s, encoding="utf-8")
        return s

    @classmethod
    def from_json(cls, source: Union[str, Path]) -> DensityMatrix:
        """Load from a JSON document or from a path to one."""
        if isinstance(source, str) and source.lstrip().startswith("{"):
            content = source
        else:
            content = Path(source).read_text(encoding="utf-8")
        return cls.from_dict(json.loads(content))


@dataclass
class Spectrum:
    """Eigenvalues sorted descending and the matching eigenvector columns"""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


@dataclass
class MubSet:
    """Orthonormal bases in dimension d; columns of each unitary are the basis vectors"""

    dim: int
    bases: List[np.ndarray]
    construction_tag: ConstructionTag = "custom"

    def __post_init__(self) -> None:
        if not self.bases:
            raise DimensionError("MubSet requires at least one basis")
        for idx, basis in enumerate(self.bases):
            if np.shape(basis) != (self.dim, self.dim):
                raise DimensionError(
                    f"bases[{idx}] has shape {np.shape(basis)}, expected ({self.dim}, {self.dim})"
                )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "construction_tag": self.construction_tag,
            "bases": [_serialize_value(np.asarray(b)) for b in self.bases],
        }


@dataclass
class MubReport:
    """Worst-case deviations found by verify_mubs"""

    dim: int
    num_bases: int
    max_overlap_error: float
    max_trace_identity_error: float
    orthonormality_error: float
    tol: float

    @property
    def passed(self) -> bool:
        return (
            self.max_overlap_error <= self.tol
            and self.max_trace_identity_error <= self.tol
            and self.orthonormality_error <= self.tol
        )

    def to_dict(self) -> Dict[str, Any]:
        result = {f.name: _serialize_value(getattr(self, f.name)) for f in fields(self)}
        result["passed"] = self.passed
        return result


@dataclass
class InfoResult:
    """Invariant information in bits together with how it was obtained"""

    bits: float
    method: InfoMethod
    dim: int
    raw_bits: float = 0.0
    normalization: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: _serialize_value(getattr(self, f.name)) for f in fields(self)}


@dataclass
class AdditivityReport:
    """Both sides of I(rho x sigma) = I(rho) + I(sigma) and their difference"""

    lhs: float
    rhs: float
    gap: float

    def to_dict(self) -> Dict[str, Any]:
        return {"lhs": self.lhs, "rhs": self.rhs, "gap": self.gap}


@dataclass
class IsotropicParams:
    """Local dimension and fidelity of an isotropic state"""

    d: int
    F: float

    def __post_init__(self) -> None:
        if int(self.d) < 2:
            raise DomainError(f"Isotropic local dimension must be >= 2, got {self.d}")
        if not (0.0 <= float(self.F) <= 1.0):
            raise DomainError(f"Isotropic fidelity F must lie in [0, 1], got {self.F}")
        self.d = int(self.d)
        self.F = float(self.F)

    @property
    def separable(self) -> bool:
        return self.F <= 1.0 / self.d


@dataclass
class GapReport:
    """Information gap I(rho12) - I(rho1) - I(rho2) with its lower and upper bounds"""

    d: int
    info_12: float
    info_1: float
    info_2: float
    gap: float
    lower_bound: float
    upper_bound: float
    tangle_12: float
    tangle_12R: float
    info_R: float
    tangle_method: TangleMethod
    purification_residual: float

    @property
    def within_bounds(self) -> bool:
        return self.lower_bound - 1e-9 <= self.gap <= self.upper_bound + 1e-9

    def to_dict(self) -> Dict[str, Any]:
        result = {f.name: _serialize_value(getattr(self, f.name)) for f in fields(self)}
        result["within_bounds"] = self.within_bounds
        return result


@dataclass
class ConjectureProbe:
    """Both sides of the isotropic-state conjecture at one fidelity"""

    F: float
    d: int
    lhs: float
    rhs: float
    satisfied: bool
    label: str = "conjecture probe"

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: _serialize_value(getattr(self, f.name)) for f in fields(self)}


@dataclass
class ChannelSpec:
    """Qubit decoherence channel applied independently to each target qubit"""

    kind: ChannelKind
    p: float
    targets: Optional[List[int]] = None  # None means every subsystem

    def __post_init__(self) -> None:
        if self.kind not in CHANNEL_KINDS:
            raise DomainError(f"Unknown channel kind '{self.kind}'. Must be one of {CHANNEL_KINDS}")
        if not (0.0 <= float(self.p) <= 1.0):
            raise DomainError(f"Decoherence degree p must lie in [0, 1], got {self.p}")
        self.p = float(self.p)
        if self.targets is not None:
            self.targets = [int(t) for t in self.targets]

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self) if getattr(self, f.name) is not None}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> ChannelSpec:
        field_names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in field_names})


@dataclass
class GridAxis:
    """One swept variable: steps evenly spaced values from min to max inclusive"""

    name: str
    min: float
    max: float
    steps: int

    @property
    def step(self) -> float:
        return (self.max - self.min) / (self.steps - 1)

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.steps)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "min": self.min, "max": self.max, "steps": self.steps}


@dataclass
class SweepGrid:
    """Cartesian grid over one or more axes"""

    axes: List[GridAxis]

    def __post_init__(self) -> None:
        from .validator import validate_grid

        result = validate_grid(self)
        if not result.is_valid:
            raise DomainError(f"Invalid sweep grid: {result.summary()}")

    def axis(self, name: str) -> GridAxis:
        for ax in self.axes:
            if ax.name == name:
                return ax
        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {"axes": [ax.to_dict() for ax in self.axes]}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> SweepGrid:
        return cls(axes=[GridAxis(**ax) for ax in data["axes"]])


@dataclass
class CheckResult:
    """Outcome of a single property check inside a verification suite"""

    name: str
    worst_residual: float
    tolerance: float
    passed: bool
    reported_only: bool = False
    samples: int = 0
    detail: Optional[str] = None
    duration_ms: float = 0.0

    def to_dict(self) -> Dict[str, Any]:
        result = {}
        for f in fields(self):
            val = getattr(self, f.name)
            if val is not None:
                result[f.name] = _serialize_value(val)
        return result


@dataclass
class SuiteReport:
    """Aggregated results of one or more verification suites"""

    suite: str
    seed: int
    checks: List[CheckResult] = field(default_factory=list)
    total_duration_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed or c.reported_only for c in self.checks)

    def to_dict(self, include_timings: bool = True) -> Dict[str, Any]:
        """Without timings the report depends only on the seed and the code."""
        checks = [c.to_dict() for c in self.checks]
        result: Dict[str, Any] = {"suite": self.suite, "seed": self.seed, "passed": self.passed, "checks": checks}
        if include_timings:
            result["total_duration_ms"] = self.total_duration_ms
        else:
            for c in checks:
                c.pop("duration_ms", None)
        return result

    def to_json(self, indent: int = 2, include_timings: bool = True) -> str:
        return json.dumps(self.to_dict(include_timings), indent=indent, sort_keys=True)


@dataclass
class RunOptions:
    """Options shared by the verification suites and the sweep drivers"""

    seed: int = 0
    tol: Optional[float] = None  # overrides per-check tolerances when set
    max_workers: int = 1  # > 1 evaluates sweep grid points on a thread pool
    verbose: bool = True  # status lines on stderr
    samples: Optional[int] = None  # per-suite random sample count override
    output_format: Optional[OutputFormat] = None  # None picks the sink from the --out extension
