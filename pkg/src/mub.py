# mub.py
# Complete sets of mutually unbiased bases in prime-power dimensions
# Author: qinvar developers

"""
Construction and verification of d+1 mutually unbiased bases.

Odd d = p^k uses the quadratic exponential form
    |a, j>_m = omega_p^{tr(a m^2 + j m)} / sqrt(d)
over GF(d), together with the computational basis. For d = 2^k the d^2 - 1
non-identity Pauli strings are split into d+1 commuting classes of d-1
operators and each class is diagonalized jointly.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .adapters import adapter_for_path
from .gf import Field, field_new, trace
from .helpers import MAX_PRIME_POWER, prime_power
from .qlinalg import spectrum
from .state_types import DomainError, MubReport, MubSet

DEFAULT_TOL = 1e-10

# single-qubit Paulis keyed by (x bit, z bit)
_PAULI = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
}


@lru_cache(maxsize=None)
def _field_tables(f: Field) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Addition table, multiplication table and trace vector indexed by element index."""
    elems = f.elements()
    q = f.order
    add_t = np.zeros((q, q), dtype=np.int64)
    mul_t = np.zeros((q, q), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            add_t[i, j] = int(x + y)
            mul_t[i, j] = int(x * y)
    tr = np.array([trace(x) for x in elems], dtype=np.int64)
    return add_t, mul_t, tr


def _quadratic_bases(p: int, k: int) -> List[np.ndarray]:
    d = p**k
    bases = [np.eye(d, dtype=complex)]
    m = np.arange(d)
    if k == 1:
        for a in range(d):
            # rows index the component m, columns index the vector j
            expo = (a * m[:, None] ** 2 + m[:, None] * m[None, :]) % d
            bases.append(np.exp(2j * np.pi * expo / d) / np.sqrt(d))
        return bases

    add_t, mul_t, tr = _field_tables(field_new(p, k))
    sq = mul_t[m, m]
    for a in range(d):
        a_m2 = mul_t[a, sq]  # a * m^2 for every m
        j_m = mul_t[m[None, :], m[:, None]]  # [m, j] -> j * m
        expo = tr[add_t[a_m2[:, None], j_m]]
        bases.append(np.exp(2j * np.pi * expo / p) / np.sqrt(d))
    return bases


def _pauli_matrix(x_bits: Tuple[int, ...], z_bits: Tuple[int, ...]) -> np.ndarray:
    out = np.ones((1, 1), dtype=complex)
    for xb, zb in zip(x_bits, z_bits):
        out = np.kron(out, _PAULI[(xb, zb)])
    return out


def pauli_classes(k: int) -> List[List[Tuple[Tuple[int, ...], Tuple[int, ...]]]]:
    """
    Partition the 4^k - 1 non-identity k-qubit Pauli labels (x bits, z bits) into
    2^k + 1 commuting classes of 2^k - 1 labels each.

    The Z-type labels form the first class. For every lambda in GF(2^k) the class
    {(v(a), w(lambda a)) : a != 0} follows, where v gives polynomial coordinates
    and w(u)_i = tr(u x^i). Labels (v(a), w(lambda a)) and (v(b), w(lambda b))
    have symplectic product tr(lambda a b) + tr(lambda b a) = 0, so each class
    commutes; linearity in a makes it a group.
    """
    f = field_new(2, k)
    elems = f.elements()
    monomials = [f.element([0] * i + [1]) for i in range(k)]

    def v(u):
        return tuple(u.coeffs)

    def w(u):
        return tuple(trace(u * e) for e in monomials)

    classes = [[((0,) * k, w(b)) for b in elems[1:]]]
    for lam in elems:
        classes.append([(v(a), w(lam * a)) for a in elems[1:]])
    return classes


def _joint_eigenbasis(labels, k: int) -> np.ndarray:
    """
    Joint eigenbasis of a commuting Pauli class.

    The class is the span of the k labels built from the polynomial basis
    x^0..x^(k-1); weighting those generators by 1, 2, 4, ... makes every joint
    eigenvalue pattern map to a distinct eigenvalue of the weighted sum.
    """
    d = 2**k
    # labels are listed by element index, so the generators sit at indices 2^i - 1
    generators = [labels[2**i - 1] for i in range(k)]
    combo = np.zeros((d, d), dtype=complex)
    for weight, (xb, zb) in enumerate(generators):
        combo += (2.0**weight) * _pauli_matrix(xb, zb)
    return spectrum(combo).eigenvectors


def _pauli_bases(k: int) -> List[np.ndarray]:
    d = 2**k
    classes = pauli_classes(k)
    bases = [np.eye(d, dtype=complex)]  # joint eigenbasis of the Z-type class
    for labels in classes[1:]:
        bases.append(_joint_eigenbasis(labels, k))
    return bases


@lru_cache(maxsize=None)
def _build_bases(d: int) -> Tuple[Tuple[np.ndarray, ...], str]:
    p, k = prime_power(d)
    if p == 2:
        bases, tag = _pauli_bases(k), "pauli-classes"
    elif k == 1:
        bases, tag = _quadratic_bases(p, 1), "quadratic-prime"
    else:
        bases, tag = _quadratic_bases(p, k), "quadratic-galois"
    for b in bases:
        b.setflags(write=False)
    return tuple(bases), tag


def build_mubs(d: int) -> MubSet:
    """
    Build d+1 mutually unbiased bases for a prime power d <= 32.

    :raises DomainError: d is not a prime power or exceeds the cap
    """
    d = int(d)
    if prime_power(d) is None:
        raise DomainError(f"Dimension {d} is not a prime power")
    if d > MAX_PRIME_POWER:
        raise DomainError(f"Dimension {d} exceeds the supported maximum {MAX_PRIME_POWER}")
    bases, tag = _build_bases(d)
    return MubSet(dim=d, bases=list(bases), construction_tag=tag)


def projectors(mubs: MubSet) -> np.ndarray:
    """Rank-1 projectors; entry [alpha, j] is |alpha, j><alpha, j|."""
    U = np.stack([np.asarray(b) for b in mubs.bases])  # (n, d, d), vectors in columns
    vecs = np.transpose(U, (0, 2, 1))  # (n, j, component)
    return np.einsum("nji,njk->njik", vecs, vecs.conj())


def verify_mubs(mubs: MubSet, tol: float = DEFAULT_TOL) -> MubReport:
    """
    Worst-case deviations of a basis set from orthonormality, the 1/d overlap
    property, and the projector identity Tr(P_aj P_bk) = d_ab d_jk + (1 - d_ab)/d.

    Reports rather than raises.
    """
    d = mubs.dim
    U = [np.asarray(b, dtype=complex) for b in mubs.bases]
    n = len(U)
    eye = np.eye(d)

    ortho = max(float(np.max(np.abs(u.conj().T @ u - eye))) for u in U)

    overlap = 0.0
    for a in range(n):
        for b in range(a + 1, n):
            o = np.abs(U[a].conj().T @ U[b]) ** 2
            overlap = max(overlap, float(np.max(np.abs(o - 1.0 / d))))

    P = projectors(mubs).reshape(n * d, d * d)
    gram = np.real(P.conj() @ P.T)
    same_basis = np.kron(np.eye(n), np.ones((d, d)))
    expected = np.kron(np.eye(n), eye) + (1.0 - same_basis) / d
    trace_err = float(np.max(np.abs(gram - expected)))

    return MubReport(
        dim=d,
        num_bases=n,
        max_overlap_error=overlap,
        max_trace_identity_error=trace_err,
        orthonormality_error=ortho,
        tol=tol,
    )


def mub_rows(mubs: MubSet) -> List[Dict[str, Union[int, float]]]:
    """One row per basis entry: basis, vector, component, real, imag."""
    rows = []
    for alpha, basis in enumerate(mubs.bases):
        b = np.asarray(basis)
        for j in range(mubs.dim):
            for m in range(mubs.dim):
                z = b[m, j]
                rows.append(
                    {"basis": alpha, "vector": j, "component": m, "real": float(z.real), "imag": float(z.imag)}
                )
    return rows


def dump_mubs(mubs: MubSet, path: Union[str, Path], adapter: Optional[str] = None) -> int:
    """Write every basis entry through a result adapter; returns the number of rows written."""
    rows = mub_rows(mubs)
    adapter_for_path(path, adapter).write(rows)
    return len(rows)
