# validator.py
# Validation logic for qinvar states, channel specs and sweep grids
# Author: qinvar developers

from __future__ import annotations

import math
from typing import TYPE_CHECKING, List, Optional, Sequence

import numpy as np

from .state_types import CHANNEL_KINDS, ValidationError, ValidationResult

if TYPE_CHECKING:
    from .state_types import ChannelSpec, SweepGrid

NORM_TOL = 1e-12
HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_SLACK = 1e-10


def _dims_product(dims: Sequence[int]) -> int:
    return int(math.prod(dims)) if dims else 0


def _check_dims(dims: Sequence[int], size: int, path: str, errors: List[ValidationError]) -> None:
    if not dims or any(d < 1 for d in dims):
        errors.append(
            ValidationError(
                path=f"{path}.dims",
                message=f"Subsystem dimensions must be positive integers, got {list(dims)}",
                code="DIM_MISMATCH",
            )
        )
    elif _dims_product(dims) != size:
        errors.append(
            ValidationError(
                path=f"{path}.dims",
                message=f"Product of dims {list(dims)} is {_dims_product(dims)}, expected {size}",
                code="DIM_MISMATCH",
            )
        )


def validate_pure_state(amplitudes: np.ndarray, dims: Sequence[int]) -> ValidationResult:
    """
    Check that a state vector is normalized and matches its declared dimensions.

    :param amplitudes: 1-D complex amplitude vector
    :param dims: ordered subsystem dimensions
    :return: ValidationResult with errors and warnings
    """
    errors: List[ValidationError] = []
    warnings: List[str] = []

    _check_dims(dims, amplitudes.shape[0], "state", errors)

    norm = float(np.linalg.norm(amplitudes))
    if abs(norm - 1.0) > NORM_TOL:
        errors.append(
            ValidationError(
                path="state.amplitudes",
                message=f"State norm is {norm!r}, expected 1 within {NORM_TOL}",
                code="NOT_NORMALIZED",
            )
        )

    return ValidationResult(is_valid=len(errors) == 0, errors=errors, warnings=warnings)


def validate_density_matrix(
    entries: np.ndarray,
    dims: Sequence[int],
    hermitian_tol: float = HERMITIAN_TOL,
    trace_tol: float = TRACE_TOL,
    positivity_slack: float = POSITIVITY_SLACK,
) -> ValidationResult:
    """
    Check Hermiticity, unit trace, positivity and declared dimensions of a density matrix.

    :param entries: square complex matrix
    :param dims: ordered subsystem dimensions
    :return: ValidationResult with errors and warnings
    """
    errors: List[ValidationError] = []
    warnings: List[str] = []

    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        errors.append(
            ValidationError(
                path="rho.entries",
                message=f"Density matrix must be square, got shape {entries.shape}",
                code="NOT_SQUARE",
            )
        )
        return ValidationResult(is_valid=False, errors=errors, warnings=warnings)

    _check_dims(dims, entries.shape[0], "rho", errors)

    herm_err = float(np.max(np.abs(entries - entries.conj().T))) if entries.size else 0.0
    if herm_err > hermitian_tol:
        errors.append(
            ValidationError(
                path="rho.entries",
                message=f"Matrix is not Hermitian (max deviation {herm_err:.3e})",
                code="NOT_HERMITIAN",
            )
        )
        # eigvalsh would silently use one triangle
        return ValidationResult(is_valid=False, errors=errors, warnings=warnings)

    trace = complex(np.trace(entries))
    if abs(trace - 1.0) > trace_tol:
        errors.append(
            ValidationError(
                path="rho.entries",
                message=f"Trace is {trace!r}, expected 1 within {trace_tol}",
                code="TRACE_NOT_ONE",
            )
        )

    min_eig = float(np.linalg.eigvalsh(entries)[0])
    if min_eig < -positivity_slack:
        errors.append(
            ValidationError(
                path="rho.entries",
                message=f"Minimum eigenvalue {min_eig:.3e} is below -{positivity_slack}",
                code="NOT_POSITIVE",
            )
        )
    elif min_eig < 0:
        warnings.append(f"rho.entries: minimum eigenvalue {min_eig:.3e} tolerated as rounding")

    return ValidationResult(is_valid=len(errors) == 0, errors=errors, warnings=warnings)


def validate_channel_spec(spec: "ChannelSpec", dims: Sequence[int]) -> ValidationResult:
    """
    Check a channel spec against the subsystem dimensions it will act on.

    Every target must name an existing, two-dimensional subsystem.
    """
    errors: List[ValidationError] = []
    warnings: List[str] = []

    if spec.kind not in CHANNEL_KINDS:
        errors.append(
            ValidationError(
                path="spec.kind",
                message=f"Unknown channel kind '{spec.kind}'. Must be one of {CHANNEL_KINDS}",
                code="INVALID_KIND",
            )
        )
    if not (0.0 <= spec.p <= 1.0):
        errors.append(
            ValidationError(
                path="spec.p",
                message=f"Decoherence degree must lie in [0, 1], got {spec.p}",
                code="INVALID_PROBABILITY",
            )
        )

    targets = list(range(len(dims))) if spec.targets is None else spec.targets
    if not targets:
        errors.append(
            ValidationError(path="spec.targets", message="No target subsystems", code="INVALID_TARGET")
        )
    if len(set(targets)) != len(targets):
        errors.append(
            ValidationError(
                path="spec.targets",
                message=f"Duplicate target indices in {targets}",
                code="INVALID_TARGET",
            )
        )
    for idx, t in enumerate(targets):
        if t < 0 or t >= len(dims):
            errors.append(
                ValidationError(
                    path=f"spec.targets[{idx}]",
                    message=f"Target {t} out of range for {len(dims)} subsystems",
                    code="INVALID_TARGET",
                )
            )
        elif dims[t] != 2:
            errors.append(
                ValidationError(
                    path=f"spec.targets[{idx}]",
                    message=f"Target {t} has dimension {dims[t]}; channels act on qubits only",
                    code="INVALID_TARGET",
                )
            )

    return ValidationResult(is_valid=len(errors) == 0, errors=errors, warnings=warnings)


def validate_grid(grid: "SweepGrid", domains: Optional[dict] = None) -> ValidationResult:
    """
    Check every axis of a sweep grid: steps >= 2, min < max, values inside the axis domain.

    :param domains: optional mapping axis name -> (low, high) admissible range
    """
    errors: List[ValidationError] = []
    warnings: List[str] = []

    if not grid.axes:
        errors.append(ValidationError(path="grid.axes", message="Grid has no axes", code="INVALID_GRID"))

    seen = set()
    for idx, ax in enumerate(grid.axes):
        path = f"grid.axes[{idx}]"
        if ax.name in seen:
            errors.append(
                ValidationError(path=f"{path}.name", message=f"Duplicate axis '{ax.name}'", code="INVALID_GRID")
            )
        seen.add(ax.name)
        if int(ax.steps) < 2:
            errors.append(
                ValidationError(
                    path=f"{path}.steps",
                    message=f"Axis '{ax.name}' needs at least 2 steps, got {ax.steps}",
                    code="INVALID_GRID",
                )
            )
        if not ax.min < ax.max:
            errors.append(
                ValidationError(
                    path=path,
                    message=f"Axis '{ax.name}' requires min < max, got [{ax.min}, {ax.max}]",
                    code="INVALID_GRID",
                )
            )
        if domains and ax.name in domains:
            low, high = domains[ax.name]
            if ax.min < low or ax.max > high:
                errors.append(
                    ValidationError(
                        path=path,
                        message=f"Axis '{ax.name}' range [{ax.min}, {ax.max}] leaves domain [{low}, {high}]",
                        code="INVALID_GRID",
                    )
                )

    return ValidationResult(is_valid=len(errors) == 0, errors=errors, warnings=warnings)
