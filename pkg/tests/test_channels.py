# tests/test_channels.py
# Unit tests for qubit decoherence channels

import math

import numpy as np
import pytest

from qinvar import (
    ChannelSpec,
    DensityMatrix,
    DimensionError,
    DomainError,
    apply_channel,
    apply_kraus,
    basis_state,
    decoherence_minimum,
    density_from_pure,
    invariant_info_closed,
    kraus_operators,
    local_info_after_channel,
    local_info_depolarized_closed,
    maximally_mixed,
    pure_tangle,
    superposition_state,
)
from qinvar.state_types import CHANNEL_KINDS, GridAxis, SweepGrid


def _grid(steps):
    return SweepGrid(axes=[GridAxis("a", 0.0, 1.0, steps), GridAxis("p", 0.0, 1.0, steps)])


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
def test_p_zero_is_identity(random_state, kind):
    rho = random_state([2, 2])
    out = apply_channel(rho, ChannelSpec(kind=kind, p=0.0))
    assert np.max(np.abs(out.entries - rho.entries)) <= 1e-15


def test_full_strength_endpoints(random_state):
    rho = random_state([2, 2])
    depolarized = apply_channel(rho, ChannelSpec(kind="depolarization", p=1.0))
    assert np.allclose(depolarized.entries, np.eye(4) / 4, atol=1e-15)
    damped = apply_channel(rho, ChannelSpec(kind="dissipation", p=1.0))
    assert np.allclose(damped.entries, density_from_pure(basis_state(0, [2, 2])).entries, atol=1e-15)


def test_single_qubit_elementwise_maps():
    rho = DensityMatrix(entries=np.array([[0.7, 0.2 - 0.1j], [0.2 + 0.1j, 0.3]]), dims=[2])
    p = 0.4
    dephased = apply_channel(rho, ChannelSpec(kind="dephasing", p=p)).entries
    assert dephased[0, 0] == pytest.approx(0.7)
    assert dephased[0, 1] == pytest.approx((1 - p) * (0.2 - 0.1j))

    depolarized = apply_channel(rho, ChannelSpec(kind="depolarization", p=p)).entries
    assert depolarized[0, 0] == pytest.approx((1 - p) * 0.7 + p / 2)
    assert depolarized[1, 0] == pytest.approx((1 - p) * (0.2 + 0.1j))

    damped = apply_channel(rho, ChannelSpec(kind="dissipation", p=p)).entries
    assert damped[0, 0] == pytest.approx(0.7 + p * 0.3)
    assert damped[1, 1] == pytest.approx((1 - p) * 0.3)
    assert damped[0, 1] == pytest.approx(math.sqrt(1 - p) * (0.2 - 0.1j))


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
def test_trace_positivity_and_kraus_agreement(random_state, kind):
    for _ in range(20):
        rho = random_state([2, 2])
        for p in (0.1, 0.5, 0.9, 1.0):
            spec = ChannelSpec(kind=kind, p=p)
            out = apply_channel(rho, spec)
            assert abs(np.trace(out.entries).real - 1.0) <= 1e-12
            assert np.linalg.eigvalsh(out.entries)[0] >= -1e-10
            assert np.max(np.abs(out.entries - apply_kraus(rho, spec).entries)) <= 1e-10


@pytest.mark.parametrize("kind", CHANNEL_KINDS)
def test_kraus_completeness(kind):
    for p in (0.0, 0.3, 1.0):
        total = sum(K.conj().T @ K for K in kraus_operators(kind, p))
        assert np.allclose(total, np.eye(2), atol=1e-15)


def test_targets_restrict_action(random_state):
    rho = random_state([2, 2])
    out = apply_channel(rho, ChannelSpec(kind="depolarization", p=1.0, targets=[1]))
    # only qubit 1 is reset; qubit 0 keeps its reduced state
    first = out.entries.reshape(2, 2, 2, 2).trace(axis1=1, axis2=3)
    before = rho.entries.reshape(2, 2, 2, 2).trace(axis1=1, axis2=3)
    assert np.allclose(first, before, atol=1e-14)
    assert np.allclose(out.entries, np.kron(before, np.eye(2) / 2), atol=1e-14)


def test_invalid_targets_and_specs():
    with pytest.raises(DimensionError):
        apply_channel(maximally_mixed([2, 3]), ChannelSpec(kind="dephasing", p=0.2))
    with pytest.raises(DimensionError):
        apply_channel(maximally_mixed([2, 2]), ChannelSpec(kind="dephasing", p=0.2, targets=[2]))
    with pytest.raises(DimensionError):
        apply_channel(maximally_mixed([2, 2]), ChannelSpec(kind="dephasing", p=0.2, targets=[0, 0]))
    with pytest.raises(DomainError):
        ChannelSpec(kind="amplitude", p=0.2)
    with pytest.raises(DomainError):
        ChannelSpec(kind="dephasing", p=1.5)


def test_superposition_state():
    assert np.allclose(superposition_state(1.0).amplitudes, [1, 0, 0, 0])
    assert np.allclose(superposition_state(0.0).amplitudes, [0, 0, 0, 1])
    assert pure_tangle(superposition_state(1 / math.sqrt(2))) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(DomainError):
        superposition_state(1.1)


def test_depolarized_closed_form_values():
    assert local_info_depolarized_closed(0.3, 0.0) == pytest.approx(2.0, abs=1e-12)
    assert local_info_depolarized_closed(0.3, 1.0) == pytest.approx(0.0, abs=1e-12)
    assert local_info_depolarized_closed(0.0, 0.5) == pytest.approx(3 / 8, abs=1e-12)
    with pytest.raises(DomainError):
        local_info_depolarized_closed(0.5, -0.1)


def test_depolarized_simulation_matches_closed_form():
    for a in np.linspace(0, 1, 21):
        for p in np.linspace(0, 1, 21):
            spec = ChannelSpec(kind="depolarization", p=float(p))
            sim = local_info_after_channel(float(a), spec)
            assert sim == pytest.approx(local_info_depolarized_closed(float(a), float(p)), abs=1e-10)


def test_dephasing_and_dissipation_examples():
    dephased = apply_channel(
        density_from_pure(superposition_state(1 / math.sqrt(2))), ChannelSpec(kind="dephasing", p=1.0)
    )
    assert np.allclose(np.diag(dephased.entries), [0.5, 0, 0, 0.5])
    assert invariant_info_closed(dephased).bits == pytest.approx(2 / 3, abs=1e-12)
    for a in (0.0, 0.4, 1.0):
        assert local_info_after_channel(a, ChannelSpec(kind="dissipation", p=1.0)) == pytest.approx(2.0, abs=1e-12)


def test_decoherence_minima():
    grid = _grid(21)
    depol, _, p = decoherence_minimum("depolarization", grid)
    assert depol == pytest.approx(0.0, abs=1e-12)
    assert p == 1.0
    dephase, _, p = decoherence_minimum("dephasing", grid)
    # a = 1/sqrt(2) is off the grid, so the grid minimum sits just above 2/3
    assert 2 / 3 - 1e-12 <= dephase <= 2 / 3 + 1e-3
    assert p == 1.0
    # a = 0 starts in |11>, which passes through the maximally mixed state at p = 1/2
    dissip, a, p = decoherence_minimum("dissipation", grid)
    assert dissip == pytest.approx(0.0, abs=1e-12)
    assert (a, p) == (0.0, 0.5)


@pytest.mark.slow
def test_depolarization_monotone_in_p():
    ps = np.linspace(0, 1, 101)
    for a in np.linspace(0, 1, 11):
        values = [local_info_after_channel(float(a), ChannelSpec(kind="depolarization", p=float(p))) for p in ps]
        assert all(b <= x + 1e-12 for x, b in zip(values, values[1:]))
