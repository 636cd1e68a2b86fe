# entangle.py
# Tangle, isotropic states, complementarity relations and information-gap bounds
# Author: qinvar developers

from __future__ import annotations

import math
from typing import Optional, Sequence, Tuple

import numpy as np

from .helpers import haar_amplitudes, normalization
from .invinfo import info_bits, invariant_info_closed, local_informations
from .qlinalg import density_from_pure, partial_trace, purify, purity
from .state_types import (
    BoundViolationError,
    ConjectureProbe,
    DensityMatrix,
    DimensionError,
    DomainError,
    GapReport,
    InvalidStateError,
    IsotropicParams,
    PureState,
    TangleMethod,
)

TANGLE_CROSS_CHECK_TOL = 1e-10
ISOTROPIC_MATCH_TOL = 1e-10
PURE_PURITY_TOL = 1e-10
BOUND_TOL = 1e-9


def _square_bipartition(dims: Sequence[int], what: str) -> int:
    if len(dims) != 2 or dims[0] != dims[1]:
        raise DimensionError(f"{what} requires a d x d bipartite state, got dims {list(dims)}")
    return int(dims[0])


def maximally_entangled(d: int) -> PureState:
    """|Phi+> = sum_i |ii> / sqrt(d)."""
    amps = np.zeros(d * d, dtype=complex)
    amps[:: d + 1] = 1.0 / math.sqrt(d)
    return PureState(amplitudes=amps, dims=[d, d])


def haar_pure_state(dims: Sequence[int], rng: np.random.Generator) -> PureState:
    return PureState(amplitudes=haar_amplitudes(rng, math.prod(dims)), dims=list(dims))


def pure_tangle(psi: PureState, cut: Sequence[int] = (0,)) -> float:
    """
    tau = 2 (1 - Tr rho_A^2) for the cut A : rest of a pure state.

    Both sides of the cut are reduced and their purities must agree.

    :param cut: subsystem indices forming side A
    :raises DimensionError: the cut is empty or covers every subsystem
    """
    n = len(psi.dims)
    side_a = sorted(set(int(c) for c in cut))
    side_b = [i for i in range(n) if i not in side_a]
    if not side_a or not side_b:
        raise DimensionError(f"Cut {list(cut)} does not split {n} subsystems into two parts")

    rho = density_from_pure(psi)
    p_a = purity(partial_trace(rho, side_a))
    p_b = purity(partial_trace(rho, side_b))
    if abs(p_a - p_b) > TANGLE_CROSS_CHECK_TOL:
        raise InvalidStateError(f"Reduced purities disagree across the cut: {p_a!r} vs {p_b!r}")
    return 2.0 * (1.0 - p_a)


def isotropic_state(params: IsotropicParams) -> DensityMatrix:
    """
    rho = (1-F)/(d^2-1) (I - |Phi+><Phi+|) + F |Phi+><Phi+|.
    """
    d, F = params.d, params.F
    D = d * d
    phi = maximally_entangled(d).amplitudes
    proj = np.outer(phi, phi.conj())
    entries = (1.0 - F) / (D - 1) * (np.eye(D) - proj) + F * proj
    return DensityMatrix(entries=entries, dims=[d, d])


def isotropic_tangle_d3(F: float) -> float:
    """Closed-form tangle of the two-qutrit isotropic state: 0 below F = 1/3, 3 (F - 1/3)^2 above."""
    if not 0.0 <= F <= 1.0:
        raise DomainError(f"Fidelity F must lie in [0, 1], got {F}")
    if F <= 1.0 / 3.0:
        return 0.0
    return 3.0 * (F - 1.0 / 3.0) ** 2


def isotropic_info_closed(F: float) -> float:
    """I(rho12) of the two-qutrit isotropic state: (81F^2 - 18F + 1)/32 * log2(3)."""
    if not 0.0 <= F <= 1.0:
        raise DomainError(f"Fidelity F must lie in [0, 1], got {F}")
    return (81.0 * F * F - 18.0 * F + 1.0) / 32.0 * math.log2(3)


def isotropic_fidelity(rho: DensityMatrix, tol: float = ISOTROPIC_MATCH_TOL) -> Optional[float]:
    """
    F = <Phi+|rho|Phi+> if rho is an isotropic state within tol, otherwise None.
    """
    if len(rho.dims) != 2 or rho.dims[0] != rho.dims[1]:
        return None
    d = rho.dims[0]
    phi = maximally_entangled(d).amplitudes
    F = float(np.real(np.vdot(phi, rho.entries @ phi)))
    F = min(max(F, 0.0), 1.0)
    candidate = isotropic_state(IsotropicParams(d=d, F=F))
    if float(np.max(np.abs(candidate.entries - rho.entries))) > tol:
        return None
    return F


def mixed_tangle(rho12: DensityMatrix) -> Tuple[float, TangleMethod]:
    """
    Tangle used by the mixed-state relations, with the method that produced it.

    Pure inputs use the exact pure-state tangle; two-qutrit isotropic inputs use
    the isotropic closed form; anything else falls back to the reduced-purity
    surrogate 2 (1 - max(Tr rho1^2, Tr rho2^2)).
    """
    d = _square_bipartition(rho12.dims, "mixed_tangle")
    p1 = purity(partial_trace(rho12, [0]))
    if purity(rho12) >= 1.0 - PURE_PURITY_TOL:
        return 2.0 * (1.0 - p1), "pure"
    if d == 3:
        F = isotropic_fidelity(rho12)
        if F is not None:
            return isotropic_tangle_d3(F), "isotropic-d3"
    p2 = purity(partial_trace(rho12, [1]))
    return 2.0 * (1.0 - max(p1, p2)), "reduced-purity-surrogate"


def pure_complementarity_residual(psi: PureState) -> float:
    """
    I(rho1) + I(rho2) + N_D tau12 - 2 log2(D) for a pure D x D state; zero for every pure state.

    :raises DimensionError: the bipartition is not D x D
    """
    D = _square_bipartition(psi.dims, "pure_complementarity_residual")
    i1, i2 = local_informations(density_from_pure(psi))
    return i1 + i2 + normalization(D) * pure_tangle(psi) - 2.0 * math.log2(D)


def mixed_complementarity_defect(rho12: DensityMatrix) -> float:
    """2 log2(d) - I(rho1) - I(rho2) - N_d tau12; non-negative, zero on pure states."""
    d = _square_bipartition(rho12.dims, "mixed_complementarity_defect")
    i1, i2 = local_informations(rho12)
    tau, _ = mixed_tangle(rho12)
    return 2.0 * math.log2(d) - i1 - i2 - normalization(d) * tau


def conjecture9_gap(F: float, d: int = 3) -> ConjectureProbe:
    """
    Probe I(rho1) + I(rho2) + N_d tau <= 2d^2/(d^2-1) log2(d) (Tr rho^2 - 1/d^2) on an isotropic state.

    Only d = 3 has a closed-form tangle, so only d = 3 is accepted.
    """
    if d != 3:
        raise DomainError(f"Conjecture probe needs the d = 3 isotropic tangle, got d = {d}")
    rho = isotropic_state(IsotropicParams(d=d, F=F))
    i1, i2 = local_informations(rho)
    lhs = i1 + i2 + normalization(d) * isotropic_tangle_d3(F)
    rhs = 2.0 * d * d / (d * d - 1) * math.log2(d) * (purity(rho) - 1.0 / (d * d))
    return ConjectureProbe(F=float(F), d=d, lhs=lhs, rhs=rhs, satisfied=lhs <= rhs + BOUND_TOL)


def subadditivity_counterexample() -> DensityMatrix:
    """Separable two-qubit state diag(5, 4, 2, 1)/12 whose information gap is -5/54."""
    return DensityMatrix(entries=np.diag([5.0, 4.0, 2.0, 1.0]) / 12.0, dims=[2, 2])


def info_gap_report(rho12: DensityMatrix, check_bounds: bool = True) -> GapReport:
    """
    Information gap I(rho12) - I(rho1) - I(rho2) sandwiched between its purification bounds.

    The state is purified onto a reference R of dimension d^2. The lower bound is
    2 log2(d) - I(rho_R) - N_{d^2} tau_{12:R} + N_d tau12 and the upper bound 2 log2(d).

    :raises DimensionError: the bipartition is not d x d
    :raises BoundViolationError: check_bounds is set and the gap leaves its bounds
    """
    d = _square_bipartition(rho12.dims, "info_gap_report")
    D = d * d
    info_12 = info_bits(rho12)
    info_1, info_2 = local_informations(rho12)
    gap = info_12 - info_1 - info_2

    psi = purify(rho12)
    rho_R = partial_trace(density_from_pure(psi), [2])
    info_R = invariant_info_closed(rho_R).bits
    tangle_12R = pure_tangle(psi, cut=(0, 1))
    tangle_12, method = mixed_tangle(rho12)

    lower = 2.0 * math.log2(d) - info_R - normalization(D) * tangle_12R + normalization(d) * tangle_12
    upper = 2.0 * math.log2(d)
    residual = info_12 + info_R + normalization(D) * tangle_12R - 4.0 * math.log2(d)

    report = GapReport(
        d=d,
        info_12=info_12,
        info_1=info_1,
        info_2=info_2,
        gap=gap,
        lower_bound=lower,
        upper_bound=upper,
        tangle_12=tangle_12,
        tangle_12R=tangle_12R,
        info_R=info_R,
        tangle_method=method,
        purification_residual=residual,
    )
    if check_bounds and not report.within_bounds:
        raise BoundViolationError(
            f"Information gap {gap!r} outside [{lower!r}, {upper!r}] for d = {d} ({method} tangle)"
        )
    return report
