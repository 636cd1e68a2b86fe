# conftest.py
# Pytest configuration and shared fixtures
# Author: qinvar developers

import numpy as np
import pytest

from qinvar import DensityMatrix
from qinvar.helpers import random_density_entries


@pytest.fixture
def rng():
    """Seeded generator; every test gets a fresh stream."""
    return np.random.default_rng(20240611)


@pytest.fixture
def random_state(rng):
    """Factory for random mixed states with the given subsystem dims."""

    def make(dims, rank=None):
        D = int(np.prod(dims))
        return DensityMatrix(entries=random_density_entries(rng, D, rank), dims=list(dims))

    return make


@pytest.fixture
def counterexample_state():
    """Separable two-qubit state diag(5, 4, 2, 1)/12."""
    return DensityMatrix(entries=np.diag([5.0, 4.0, 2.0, 1.0]) / 12.0, dims=[2, 2])


@pytest.fixture(autouse=True)
def _clear_seed_env(monkeypatch):
    monkeypatch.delenv("QINVAR_SEED", raising=False)
