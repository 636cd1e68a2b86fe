# invinfo.py
# Invariant information of a state: MUB outcome sum and purity closed form
# Author: qinvar developers

from __future__ import annotations

import math
from typing import Tuple

import numpy as np

from .helpers import normalization
from .qlinalg import partial_trace, purity, tensor
from .state_types import AdditivityReport, DensityMatrix, DimensionError, InfoResult, MubSet


def _clamped(raw: float) -> float:
    return raw if raw > 0.0 else 0.0


def probabilities(rho: DensityMatrix, mubs: MubSet) -> np.ndarray:
    """
    Outcome probabilities p[alpha, j] = Tr(rho P_alpha_j) for every basis of the set.

    :raises DimensionError: rho and the basis set live in different dimensions
    """
    if rho.dim != mubs.dim:
        raise DimensionError(f"State dimension {rho.dim} does not match MUB dimension {mubs.dim}")
    U = np.stack([np.asarray(b) for b in mubs.bases])
    # <alpha j| rho |alpha j> for columns j of each basis
    return np.real(np.einsum("nij,ik,nkj->nj", U.conj(), rho.entries, U))


def invariant_info_mub(rho: DensityMatrix, mubs: MubSet) -> InfoResult:
    """
    I = N * sum_alpha sum_j (p_alpha_j - 1/d)^2 with N = d/(d-1) * log2(d).

    :raises DimensionError: rho and the basis set live in different dimensions
    """
    d = mubs.dim
    p = probabilities(rho, mubs)
    n = normalization(d)
    raw = float(n * np.sum((p - 1.0 / d) ** 2))
    return InfoResult(bits=_clamped(raw), method="mub-sum", dim=d, raw_bits=raw, normalization=n)


def invariant_info_closed(rho: DensityMatrix) -> InfoResult:
    """I = D/(D-1) * log2(D) * (Tr rho^2 - 1/D) for a state of any dimension D >= 2."""
    D = rho.dim
    if D < 2:
        raise DimensionError("Invariant information needs dimension >= 2")
    n = normalization(D)
    raw = n * (purity(rho) - 1.0 / D)
    return InfoResult(bits=_clamped(raw), method="closed-form", dim=D, raw_bits=raw, normalization=n)


def invariant_info_qubits(rho: DensityMatrix) -> InfoResult:
    """k-qubit form 2^k k / (2^k - 1) * (Tr rho^2 - 1/2^k)."""
    D = rho.dim
    k = int(round(math.log2(D))) if D > 1 else 0
    if k < 1 or 2**k != D:
        raise DimensionError(f"Dimension {D} is not a power of two")
    n = (2**k) * k / (2**k - 1)
    raw = n * (purity(rho) - 1.0 / 2**k)
    return InfoResult(bits=_clamped(raw), method="qubit-closed-form", dim=D, raw_bits=raw, normalization=n)


def info_bits(rho: DensityMatrix) -> float:
    return invariant_info_closed(rho).bits


def local_informations(rho12: DensityMatrix) -> Tuple[float, float]:
    """(I(rho1), I(rho2)) for a two-party state."""
    if len(rho12.dims) != 2:
        raise DimensionError(f"Expected a bipartite state, got dims {rho12.dims}")
    return info_bits(partial_trace(rho12, [0])), info_bits(partial_trace(rho12, [1]))


def mutual_gap(rho12: DensityMatrix) -> float:
    """I(rho12) - I(rho1) - I(rho2)."""
    i1, i2 = local_informations(rho12)
    return info_bits(rho12) - i1 - i2


def additivity_probe(rho: DensityMatrix, sigma: DensityMatrix) -> AdditivityReport:
    """
    Compare I(rho x sigma) with I(rho) + I(sigma) using the closed form.

    Equality is exact only in special cases (both factors pure, or both
    maximally mixed); the gap is reported, never judged.
    """
    lhs = info_bits(tensor(rho, sigma))
    rhs = info_bits(rho) + info_bits(sigma)
    return AdditivityReport(lhs=lhs, rhs=rhs, gap=lhs - rhs)
