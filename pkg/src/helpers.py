# helpers.py
# Helper functions for qinvar
# Author: qinvar developers

from __future__ import annotations

import hashlib
import math
import os
import sys
from typing import Optional, Tuple

import numpy as np
from scipy.stats import unitary_group

from .state_types import DomainError

SEED_ENV_VAR = "QINVAR_SEED"
MAX_PRIME_POWER = 32


def is_prime(n: int) -> bool:
    """Trial division; qinvar only ever asks about small integers."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(n: int) -> Optional[Tuple[int, int]]:
    """Return (p, k) with n = p**k and p prime, or None if n is not a prime power."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if n % p == 0:
            if not is_prime(p):
                return None
            k = 0
            m = n
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


def normalization(d: int) -> float:
    """N = d/(d-1) * log2(d): the factor that makes a d-level pure state carry log2(d) bits."""
    return d / (d - 1) * math.log2(d)


def format_float(x: float) -> str:
    """17 significant digits, '.' separator, no negative zero."""
    return format(float(x) + 0.0, ".17g")


def resolve_seed(value: Optional[int] = None) -> int:
    """Seed resolution: explicit value > env QINVAR_SEED > 0."""
    if value is not None:
        seed = int(value)
        source = "--seed"
    else:
        env = os.getenv(SEED_ENV_VAR)
        if env in (None, ""):
            return 0
        try:
            seed = int(env)
        except ValueError:
            raise DomainError(f"{SEED_ENV_VAR} must be an integer, got '{env}'")
        source = SEED_ENV_VAR
    if seed < 0:
        raise DomainError(f"{source} must be a non-negative integer, got {seed}")
    return seed


def stream_rng(seed: int, stream: str) -> np.random.Generator:
    """
    Independent generator per named stream.

    Derived from (seed, stream name) so that adding a stream never shifts the
    samples drawn by another one.
    """
    if seed < 0:
        raise DomainError(f"Seed must be a non-negative integer, got {seed}")
    key = int.from_bytes(hashlib.sha256(stream.encode("utf-8")).digest()[:8], "big")
    return np.random.default_rng(np.random.SeedSequence(entropy=int(seed), spawn_key=(key,)))


def haar_amplitudes(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-random unit vector from normalized complex Gaussian amplitudes."""
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return z / np.linalg.norm(z)


def random_density_entries(
    rng: np.random.Generator, dim: int, rank: Optional[int] = None
) -> np.ndarray:
    """
    Random mixed state as a mixture of `rank` Gaussian pure states (Ginibre construction).

    When rank is omitted it is drawn uniformly from 1..dim.
    """
    if rank is None:
        rank = int(rng.integers(1, dim + 1))
    g = rng.standard_normal((dim, rank)) + 1j * rng.standard_normal((dim, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    return unitary_group.rvs(dim, random_state=rng)


def log_status(message: str, icon: str = "➡️ ", verbose: bool = True) -> None:
    """Print a status line to stderr so stdout stays clean for CSV/JSON."""
    if verbose:
        print(f"{icon} {message}", file=sys.stderr)
