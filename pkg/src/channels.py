# channels.py
# Qubit decoherence channels: depolarization, dephasing and dissipation
# Author: qinvar developers

"""
Each channel acts independently on every target qubit of a multi-party state.

The channels are applied as linear maps on matrix entries. A single-qubit map
is a tensor S[a, b, i, j] sending |i><j| to sum_ab S[a, b, i, j] |a><b|.
The operator-sum forms from kraus_operators give an independent route to the
same output.
"""

from __future__ import annotations

import math
from typing import List, Tuple

import numpy as np

from .invinfo import info_bits
from .qlinalg import density_from_pure
from .state_types import ChannelKind, ChannelSpec, DensityMatrix, DimensionError, DomainError, PureState, SweepGrid
from .validator import validate_channel_spec

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def _superoperator(kind: ChannelKind, p: float) -> np.ndarray:
    d = np.eye(2)
    identity_map = np.einsum("ai,bj->abij", d, d)
    if kind == "depolarization":
        # (1-p)|i><j| + p delta_ij I/2
        return (1.0 - p) * identity_map + 0.5 * p * np.einsum("ij,ab->abij", d, d)
    if kind == "dephasing":
        # diagonals kept, coherences scaled by (1-p)
        scale = np.array([[1.0, 1.0 - p], [1.0 - p, 1.0]])
        return identity_map * scale[None, None, :, :]
    if kind == "dissipation":
        # populations decay toward |0>, coherences scaled by sqrt(1-p)
        S = identity_map * np.array([[1.0, math.sqrt(1.0 - p)], [math.sqrt(1.0 - p), 1.0 - p]])[None, None, :, :]
        S[0, 0, 1, 1] += p
        return S
    raise DomainError(f"Unknown channel kind '{kind}'")


def _checked_targets(rho: DensityMatrix, spec: ChannelSpec) -> List[int]:
    result = validate_channel_spec(spec, rho.dims)
    if not result.is_valid:
        codes = {e.code for e in result.errors}
        if codes & {"INVALID_TARGET"}:
            raise DimensionError(f"Invalid channel targets: {result.summary()}")
        raise DomainError(f"Invalid channel spec: {result.summary()}")
    return list(range(len(rho.dims))) if spec.targets is None else list(spec.targets)


def apply_channel(rho: DensityMatrix, spec: ChannelSpec) -> DensityMatrix:
    """
    Apply the channel to each target qubit independently.

    :raises DimensionError: a target is missing or is not a qubit
    :raises DomainError: unknown kind or p outside [0, 1]
    """
    targets = _checked_targets(rho, spec)
    n = len(rho.dims)
    S = _superoperator(spec.kind, spec.p)
    t = rho.entries.reshape(list(rho.dims) * 2)
    for q in targets:
        t = np.tensordot(S, t, axes=([2, 3], [q, n + q]))
        t = np.moveaxis(t, [0, 1], [q, n + q])
    D = rho.dim
    out = t.reshape(D, D)
    return DensityMatrix(entries=0.5 * (out + out.conj().T), dims=list(rho.dims))


def kraus_operators(kind: ChannelKind, p: float) -> List[np.ndarray]:
    """Single-qubit operator-sum form of each channel."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"Decoherence degree p must lie in [0, 1], got {p}")
    if kind == "depolarization":
        return [math.sqrt(1.0 - 0.75 * p) * _I2] + [0.5 * math.sqrt(p) * P for P in (_X, _Y, _Z)]
    if kind == "dephasing":
        return [math.sqrt(1.0 - 0.5 * p) * _I2, math.sqrt(0.5 * p) * _Z]
    if kind == "dissipation":
        return [
            np.array([[1.0, 0.0], [0.0, math.sqrt(1.0 - p)]], dtype=complex),
            np.array([[0.0, math.sqrt(p)], [0.0, 0.0]], dtype=complex),
        ]
    raise DomainError(f"Unknown channel kind '{kind}'")


def apply_kraus(rho: DensityMatrix, spec: ChannelSpec) -> DensityMatrix:
    """Same channel as apply_channel, evaluated as sum_k K rho K^dagger on each target."""
    targets = _checked_targets(rho, spec)
    kraus = kraus_operators(spec.kind, spec.p)
    m = rho.entries
    for q in targets:
        left = int(np.prod(rho.dims[:q]))
        right = int(np.prod(rho.dims[q + 1 :]))
        acc = np.zeros_like(m)
        for K in kraus:
            full = np.kron(np.kron(np.eye(left), K), np.eye(right))
            acc += full @ m @ full.conj().T
        m = acc
    return DensityMatrix(entries=0.5 * (m + m.conj().T), dims=list(rho.dims))


def superposition_state(a: float) -> PureState:
    """a|00> + sqrt(1 - a^2)|11>."""
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"Amplitude a must lie in [0, 1], got {a}")
    b = math.sqrt(max(1.0 - a * a, 0.0))
    amps = np.array([a, 0.0, 0.0, b], dtype=complex)
    amps /= np.linalg.norm(amps)
    return PureState(amplitudes=amps, dims=[2, 2])


def local_info_depolarized_closed(a: float, p: float) -> float:
    """Closed-form invariant information of a|00> + sqrt(1-a^2)|11> with both qubits depolarized."""
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"Amplitude a must lie in [0, 1], got {a}")
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"Decoherence degree p must lie in [0, 1], got {p}")
    a2 = a * a
    poly = a2 * (1.0 - a2) * (2 * p**4 - 8 * p**3 + 10 * p**2 - 4 * p) + 0.25 * p**4 - p**3 + 2 * p**2 - 2 * p + 1
    return (2.0 / 3.0) * (4.0 * poly - 1.0)


def local_info_after_channel(a: float, spec: ChannelSpec) -> float:
    rho = density_from_pure(superposition_state(a))
    return info_bits(apply_channel(rho, spec))


def decoherence_minimum(kind: ChannelKind, grid: SweepGrid) -> Tuple[float, float, float]:
    """
    Minimum local information over an (a, p) grid.

    :return: (minimum bits, a, p) at the first grid point attaining the minimum
    """
    best = (math.inf, 0.0, 0.0)
    for a in grid.axis("a").values():
        for p in grid.axis("p").values():
            bits = local_info_after_channel(float(a), ChannelSpec(kind=kind, p=float(p)))
            if bits < best[0]:
                best = (bits, float(a), float(p))
    return best
