# qlinalg.py
# Dense complex linear algebra for small Hilbert spaces
# Author: qinvar developers

from __future__ import annotations

import math
from typing import List, Sequence, Union

import numpy as np
from scipy import linalg

from .state_types import DensityMatrix, DimensionError, InvalidStateError, PureState, Spectrum

SPECTRUM_HERMITIAN_TOL = 1e-10
PHASE_TOL = 1e-12


def pure_state(amplitudes: Sequence[complex], dims: Sequence[int]) -> PureState:
    return PureState(amplitudes=np.asarray(amplitudes, dtype=complex), dims=list(dims))


def basis_state(index: int, dims: Sequence[int]) -> PureState:
    """Computational basis vector |index> in the product space with the given dims."""
    amps = np.zeros(math.prod(dims), dtype=complex)
    amps[index] = 1.0
    return PureState(amplitudes=amps, dims=list(dims))


def maximally_mixed(dims: Sequence[int]) -> DensityMatrix:
    D = math.prod(dims)
    return DensityMatrix(entries=np.eye(D, dtype=complex) / D, dims=list(dims))


def density_from_pure(psi: PureState) -> DensityMatrix:
    """Rank-1 projector |psi><psi|."""
    v = psi.amplitudes
    return DensityMatrix(entries=np.outer(v, v.conj()), dims=list(psi.dims))


def _as_matrix(m: Union[DensityMatrix, np.ndarray]) -> np.ndarray:
    return m.entries if isinstance(m, DensityMatrix) else np.asarray(m, dtype=complex)


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """
    Reduced state on the subsystems listed in `keep`.

    Kept subsystems appear in ascending index order in the result.

    :raises DimensionError: empty, duplicate or out-of-range indices
    """
    n = len(rho.dims)
    kept = sorted(int(k) for k in keep)
    if not kept:
        raise DimensionError("partial_trace requires at least one subsystem to keep")
    if len(set(kept)) != len(kept):
        raise DimensionError(f"Duplicate subsystem indices in {list(keep)}")
    if kept[0] < 0 or kept[-1] >= n:
        raise DimensionError(f"Subsystem indices {list(keep)} out of range for {n} subsystems")

    tensor = rho.entries.reshape(list(rho.dims) * 2)
    current = n
    for idx in reversed(range(n)):
        if idx not in kept:
            tensor = np.trace(tensor, axis1=idx, axis2=idx + current)
            current -= 1
    new_dims = [rho.dims[k] for k in kept]
    D = math.prod(new_dims)
    reduced = tensor.reshape(D, D)
    return DensityMatrix(entries=0.5 * (reduced + reduced.conj().T), dims=new_dims)


def tensor(rho: DensityMatrix, sigma: DensityMatrix) -> DensityMatrix:
    return DensityMatrix(entries=np.kron(rho.entries, sigma.entries), dims=list(rho.dims) + list(sigma.dims))


def purity(rho: DensityMatrix) -> float:
    """Tr(rho^2); for Hermitian rho this is the sum of squared entry magnitudes."""
    e = rho.entries
    return float(np.real(np.vdot(e, e)))


def _canonicalize_phases(vectors: np.ndarray) -> np.ndarray:
    """Rotate each column so its first non-negligible component is real and positive."""
    out = vectors.copy()
    for col in range(out.shape[1]):
        v = out[:, col]
        nz = np.flatnonzero(np.abs(v) > PHASE_TOL)
        if nz.size:
            c = v[nz[0]]
            out[:, col] = v * (abs(c) / c)
            out[nz[0], col] = abs(c)
    return out


def spectrum(m: Union[DensityMatrix, np.ndarray]) -> Spectrum:
    """
    Eigendecomposition of a Hermitian matrix, eigenvalues descending.

    Eigenvector phases are canonicalized so repeated calls give identical output.

    :raises InvalidStateError: input is not Hermitian within 1e-10
    """
    mat = _as_matrix(m)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise DimensionError(f"spectrum requires a square matrix, got shape {mat.shape}")
    herm_err = float(np.max(np.abs(mat - mat.conj().T))) if mat.size else 0.0
    if herm_err > SPECTRUM_HERMITIAN_TOL:
        raise InvalidStateError(f"spectrum requires a Hermitian matrix (max deviation {herm_err:.3e})")
    vals, vecs = linalg.eigh(0.5 * (mat + mat.conj().T))
    order = np.argsort(vals, kind="stable")[::-1]
    return Spectrum(eigenvalues=vals[order], eigenvectors=_canonicalize_phases(vecs[:, order]))


def reconstruct(spec: Spectrum) -> np.ndarray:
    v = spec.eigenvectors
    return (v * spec.eigenvalues) @ v.conj().T


def purify(rho: DensityMatrix) -> PureState:
    """
    Purification |psi> = sum_i sqrt(lambda_i) |e_i>|i>_R.

    The reference is always padded to the full dimension D of rho, so the result
    has dims rho.dims + [D]; zero eigenvalues contribute zero amplitude.
    """
    spec = spectrum(rho)
    D = rho.dim
    weights = np.sqrt(np.clip(spec.eigenvalues, 0.0, None))
    amps = (spec.eigenvectors * weights).reshape(-1)
    amps = amps / np.linalg.norm(amps)
    return PureState(amplitudes=amps, dims=list(rho.dims) + [D])


def reduced_states(psi_or_rho: Union[PureState, DensityMatrix]) -> List[DensityMatrix]:
    """Single-subsystem reduced states, one per subsystem."""
    rho = density_from_pure(psi_or_rho) if isinstance(psi_or_rho, PureState) else psi_or_rho
    return [partial_trace(rho, [i]) for i in range(len(rho.dims))]
