# tests/test_invinfo.py
# Unit tests for invariant information

import math

import numpy as np
import pytest

from qinvar import (
    DensityMatrix,
    DimensionError,
    MubSet,
    additivity_probe,
    basis_state,
    build_mubs,
    density_from_pure,
    invariant_info_closed,
    invariant_info_mub,
    invariant_info_qubits,
    isotropic_state,
    IsotropicParams,
    local_informations,
    maximally_mixed,
    mutual_gap,
    probabilities,
    pure_state,
)
from qinvar.helpers import random_unitary


def test_maximally_mixed_carries_nothing():
    for d in (2, 3, 4, 5):
        rho = maximally_mixed([d])
        assert invariant_info_mub(rho, build_mubs(d)).bits == pytest.approx(0.0, abs=1e-12)
        assert invariant_info_closed(rho).bits == pytest.approx(0.0, abs=1e-12)
    assert invariant_info_closed(maximally_mixed([6])).bits == pytest.approx(0.0, abs=1e-12)


def test_pure_qutrit_carries_log2_3():
    rho = density_from_pure(pure_state([0.6, 0.0, 0.8j], [3]))
    res = invariant_info_mub(rho, build_mubs(3))
    assert res.method == "mub-sum"
    assert res.bits == pytest.approx(math.log2(3), abs=1e-10)


def test_diagonal_qubit_example():
    rho = DensityMatrix(entries=np.diag([0.75, 0.25]), dims=[2])
    p = probabilities(rho, build_mubs(2))
    assert np.allclose(p[0], [0.75, 0.25])
    assert np.allclose(p[1:], 0.5)
    assert invariant_info_mub(rho, build_mubs(2)).bits == pytest.approx(0.25, abs=1e-12)
    assert invariant_info_closed(rho).bits == pytest.approx(0.25, abs=1e-12)


def test_probabilities_rows_sum_to_one(random_state):
    rho = random_state([7])
    p = probabilities(rho, build_mubs(7))
    assert p.shape == (8, 7)
    assert np.max(np.abs(p.sum(axis=1) - 1.0)) <= 1e-10
    assert p.min() >= -1e-12 and p.max() <= 1 + 1e-12


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        invariant_info_mub(maximally_mixed([3]), build_mubs(2))


@pytest.mark.parametrize("d", [2, 3, 4, 5, 7, 9])
def test_mub_sum_equals_closed_form(random_state, d):
    mubs = build_mubs(d)
    for _ in range(50):
        rho = random_state([d])
        assert abs(invariant_info_mub(rho, mubs).bits - invariant_info_closed(rho).bits) <= 1e-9


def test_basis_relabeling_invariance(random_state, rng):
    d = 5
    mubs = build_mubs(d)
    perm = rng.permutation(d)
    shuffled = MubSet(dim=d, bases=[np.asarray(b)[:, perm] for b in reversed(mubs.bases)])
    for _ in range(10):
        rho = random_state([d])
        assert abs(invariant_info_mub(rho, shuffled).bits - invariant_info_mub(rho, mubs).bits) <= 1e-9


def test_unitary_invariance(random_state, rng):
    for _ in range(10):
        rho = random_state([4])
        U = random_unitary(rng, 4)
        m = U @ rho.entries @ U.conj().T
        rotated = DensityMatrix(entries=0.5 * (m + m.conj().T), dims=[4])
        assert invariant_info_closed(rotated).bits == pytest.approx(invariant_info_closed(rho).bits, abs=1e-10)


def test_range_and_raw_value(random_state):
    for _ in range(20):
        rho = random_state([3, 3])
        res = invariant_info_closed(rho)
        assert 0.0 <= res.bits <= math.log2(9) + 1e-10
        assert res.raw_bits == pytest.approx(res.bits, abs=1e-12)
        assert res.normalization == pytest.approx(9 / 8 * math.log2(9))


def test_qubit_specialisation():
    for k in (1, 2, 3):
        pure = density_from_pure(basis_state(0, [2] * k))
        assert invariant_info_qubits(pure).bits == pytest.approx(k, abs=1e-12)
        assert invariant_info_closed(pure).bits == pytest.approx(k, abs=1e-12)
    with pytest.raises(DimensionError):
        invariant_info_qubits(maximally_mixed([3]))


def test_isotropic_closed_form():
    for F in np.linspace(0, 1, 11):
        rho = isotropic_state(IsotropicParams(3, float(F)))
        expected = (81 * F * F - 18 * F + 1) / 32 * math.log2(3)
        assert invariant_info_closed(rho).bits == pytest.approx(expected, abs=1e-10)


def test_additivity_probe():
    up = density_from_pure(basis_state(0, [2]))
    down = density_from_pure(basis_state(1, [2]))
    pure_pair = additivity_probe(up, down)
    assert pure_pair.lhs == pytest.approx(2.0, abs=1e-12)
    assert pure_pair.rhs == pytest.approx(2.0, abs=1e-12)
    assert pure_pair.gap == pytest.approx(0.0, abs=1e-12)

    mixed = additivity_probe(maximally_mixed([2]), maximally_mixed([2]))
    assert mixed.lhs == pytest.approx(0.0, abs=1e-12)
    assert mixed.gap == pytest.approx(0.0, abs=1e-12)

    # purity 5/8 on a 4-level system: (8/3)(5/8 - 1/4) = 1, against 1 + 1/4
    generic = additivity_probe(up, DensityMatrix(entries=np.diag([0.75, 0.25]), dims=[2]))
    assert generic.lhs == pytest.approx(1.0, abs=1e-12)
    assert generic.rhs == pytest.approx(1.25, abs=1e-12)
    assert generic.gap == pytest.approx(-0.25, abs=1e-12)


def test_local_informations_and_mutual_gap(counterexample_state):
    i1, i2 = local_informations(counterexample_state)
    assert i1 == pytest.approx(0.25, abs=1e-12)
    assert i2 == pytest.approx(1 / 36, abs=1e-12)
    assert mutual_gap(counterexample_state) == pytest.approx(-5 / 54, abs=1e-12)
    with pytest.raises(DimensionError):
        local_informations(maximally_mixed([2]))
