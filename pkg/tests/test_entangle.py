# tests/test_entangle.py
# Unit tests for tangle, isotropic states, complementarity and information-gap bounds

import math

import numpy as np
import pytest

from qinvar import (
    BoundViolationError,
    DensityMatrix,
    DimensionError,
    DomainError,
    IsotropicParams,
    basis_state,
    conjecture9_gap,
    density_from_pure,
    haar_pure_state,
    info_gap_report,
    isotropic_fidelity,
    isotropic_info_closed,
    isotropic_state,
    isotropic_tangle_d3,
    local_informations,
    maximally_entangled,
    maximally_mixed,
    mixed_complementarity_defect,
    mixed_tangle,
    pure_complementarity_residual,
    pure_state,
    pure_tangle,
    subadditivity_counterexample,
    tensor,
)

LOG3 = math.log2(3)


class TestPureTangle:
    def test_product_state(self):
        assert pure_tangle(basis_state(4, [3, 3])) == pytest.approx(0.0, abs=1e-12)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_maximally_entangled(self, d):
        assert pure_tangle(maximally_entangled(d)) == pytest.approx(2 * (1 - 1 / d), abs=1e-12)

    @pytest.mark.parametrize("a", [0.0, 0.3, 0.6, 1 / math.sqrt(2), 1.0])
    def test_two_qubit_superposition(self, a):
        psi = pure_state([a, 0, 0, math.sqrt(1 - a * a)], [2, 2])
        assert pure_tangle(psi) == pytest.approx(4 * a * a * (1 - a * a), abs=1e-12)

    def test_invalid_cut(self):
        psi = maximally_entangled(2)
        with pytest.raises(DimensionError):
            pure_tangle(psi, cut=())
        with pytest.raises(DimensionError):
            pure_tangle(psi, cut=(0, 1))


class TestIsotropic:
    def test_endpoints(self):
        uniform = isotropic_state(IsotropicParams(3, 1 / 9))
        assert np.allclose(uniform.entries, np.eye(9) / 9, atol=1e-15)
        top = isotropic_state(IsotropicParams(3, 1.0))
        assert np.allclose(top.entries, density_from_pure(maximally_entangled(3)).entries, atol=1e-15)

    def test_spectrum(self):
        F = 0.7
        eig = np.sort(np.linalg.eigvalsh(isotropic_state(IsotropicParams(3, F)).entries))[::-1]
        assert eig[0] == pytest.approx(F, abs=1e-12)
        assert np.allclose(eig[1:], (1 - F) / 8, atol=1e-12)

    def test_params_validation(self):
        with pytest.raises(DomainError):
            IsotropicParams(3, 1.2)
        with pytest.raises(DomainError):
            IsotropicParams(1, 0.5)
        assert IsotropicParams(3, 1 / 3).separable
        assert not IsotropicParams(3, 0.34).separable

    def test_local_information_vanishes(self):
        for F in np.linspace(0, 1, 101):
            i1, i2 = local_informations(isotropic_state(IsotropicParams(3, float(F))))
            assert i1 <= 1e-10 and i2 <= 1e-10

    def test_tangle_d3(self):
        assert isotropic_tangle_d3(0.0) == 0.0
        assert isotropic_tangle_d3(1 / 3) == pytest.approx(0.0, abs=1e-15)
        assert isotropic_tangle_d3(1.0) == pytest.approx(4 / 3, abs=1e-15)
        assert isotropic_tangle_d3(1 / 3 + 1e-9) == pytest.approx(0.0, abs=1e-15)
        with pytest.raises(DomainError):
            isotropic_tangle_d3(-0.1)

    def test_info_closed_matches_state(self):
        assert isotropic_info_closed(0.0) == pytest.approx(LOG3 / 32)
        assert isotropic_info_closed(1 / 9) == pytest.approx(0.0, abs=1e-15)
        assert isotropic_info_closed(1.0) == pytest.approx(2 * LOG3)

    def test_fidelity_recovery(self, random_state):
        assert isotropic_fidelity(isotropic_state(IsotropicParams(3, 0.42))) == pytest.approx(0.42, abs=1e-12)
        assert isotropic_fidelity(random_state([3, 3])) is None
        assert isotropic_fidelity(maximally_mixed([2])) is None


class TestComplementarity:
    def test_pure_residual_random_qutrits(self, rng):
        worst = max(abs(pure_complementarity_residual(haar_pure_state([3, 3], rng))) for _ in range(200))
        assert worst <= 1e-9

    @pytest.mark.parametrize("d", [2, 3, 9])
    def test_pure_residual_special_states(self, d):
        assert abs(pure_complementarity_residual(maximally_entangled(d))) <= 1e-9
        assert abs(pure_complementarity_residual(basis_state(0, [d, d]))) <= 1e-9

    def test_pure_residual_rejects_unequal_cut(self):
        with pytest.raises(DimensionError):
            pure_complementarity_residual(basis_state(0, [2, 3]))

    def test_mixed_defect_pure_states_saturate(self, rng):
        for _ in range(20):
            rho = density_from_pure(haar_pure_state([3, 3], rng))
            assert abs(mixed_complementarity_defect(rho)) <= 1e-9

    def test_mixed_defect_nonnegative(self, random_state):
        for d in (2, 3):
            for _ in range(100):
                assert mixed_complementarity_defect(random_state([d, d])) >= -1e-9

    def test_mixed_defect_isotropic_and_uniform(self):
        for F in np.linspace(0, 1, 6):
            assert mixed_complementarity_defect(isotropic_state(IsotropicParams(3, float(F)))) >= -1e-9
        assert mixed_complementarity_defect(maximally_mixed([3, 3])) == pytest.approx(2 * LOG3, abs=1e-12)

    def test_mixed_tangle_routing(self, random_state):
        assert mixed_tangle(density_from_pure(maximally_entangled(2)))[1] == "pure"
        tau, method = mixed_tangle(isotropic_state(IsotropicParams(3, 0.5)))
        assert method == "isotropic-d3"
        assert tau == pytest.approx(3 * (0.5 - 1 / 3) ** 2)
        assert mixed_tangle(random_state([2, 2], rank=4))[1] == "reduced-purity-surrogate"


class TestConjectureProbe:
    def test_equality_points(self):
        top = conjecture9_gap(1.0)
        assert top.lhs == pytest.approx(2 * LOG3, abs=1e-9)
        assert top.rhs == pytest.approx(2 * LOG3, abs=1e-9)
        assert top.satisfied
        mixed = conjecture9_gap(1 / 9)
        assert mixed.lhs == pytest.approx(0.0, abs=1e-9)
        assert mixed.rhs == pytest.approx(0.0, abs=1e-9)
        assert mixed.label == "conjecture probe"

    def test_red_line_below_blue_line(self):
        for F in np.linspace(0, 1, 101):
            probe = conjecture9_gap(float(F))
            assert probe.satisfied
            assert probe.rhs == pytest.approx(isotropic_info_closed(float(F)), abs=1e-10)
        mid = conjecture9_gap(0.5)
        assert mid.lhs < mid.rhs

    def test_other_dimensions_rejected(self):
        with pytest.raises(DomainError):
            conjecture9_gap(0.5, d=2)


class TestInfoGapReport:
    def test_counterexample(self, counterexample_state):
        report = info_gap_report(counterexample_state)
        assert report.gap == pytest.approx(-5 / 54, abs=1e-12)
        assert report.info_12 == pytest.approx(5 / 27, abs=1e-12)
        assert report.info_1 == pytest.approx(1 / 4, abs=1e-12)
        assert report.info_2 == pytest.approx(1 / 36, abs=1e-12)
        assert report.within_bounds
        assert report.upper_bound == pytest.approx(2.0)

    def test_subadditivity_counterexample_helper(self, counterexample_state):
        assert np.array_equal(subadditivity_counterexample().entries, counterexample_state.entries)

    @pytest.mark.parametrize("d", [2, 3])
    def test_maximally_entangled_attains_upper_bound(self, d):
        report = info_gap_report(density_from_pure(maximally_entangled(d)))
        assert report.gap == pytest.approx(2 * math.log2(d), abs=1e-10)
        assert report.tangle_method == "pure"

    def test_product_of_maximally_mixed(self):
        report = info_gap_report(tensor(maximally_mixed([3]), maximally_mixed([3])))
        assert report.gap == pytest.approx(0.0, abs=1e-12)
        assert report.within_bounds

    def test_purified_cut_identity(self, random_state):
        for _ in range(30):
            report = info_gap_report(random_state([3, 3]))
            assert abs(report.purification_residual) <= 1e-9
            assert report.within_bounds

    def test_sandwich_random_qubits(self, random_state):
        for _ in range(100):
            report = info_gap_report(random_state([2, 2]), check_bounds=False)
            assert report.lower_bound - 1e-9 <= report.gap <= report.upper_bound + 1e-9

    def test_rejects_non_square(self):
        with pytest.raises(DimensionError):
            info_gap_report(maximally_mixed([2, 3]))

    def test_bound_violation_is_raised(self, monkeypatch, counterexample_state):
        import qinvar.entangle as entangle

        # an inflated tangle pushes the lower bound above the gap
        monkeypatch.setattr(entangle, "mixed_tangle", lambda rho: (10.0, "reduced-purity-surrogate"))
        with pytest.raises(BoundViolationError):
            entangle.info_gap_report(counterexample_state)


def test_counterexample_is_a_valid_separable_state(counterexample_state):
    assert isinstance(counterexample_state, DensityMatrix)
    assert np.trace(counterexample_state.entries).real == pytest.approx(1.0)
