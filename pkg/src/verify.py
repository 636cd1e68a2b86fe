# verify.py
# Named property suites that check the numerics end to end
# Author: qinvar developers

"""
Property suites behind `qinvar verify`.

Every suite draws its samples from its own random stream derived from
(seed, suite name), so adding or reordering suites never changes the samples
another suite sees. A suite returns CheckResult rows; reported-only checks
never fail the run but are always logged.
"""

from __future__ import annotations

import itertools
import math
import time
from typing import Callable, Dict, List, Optional

import numpy as np

from .channels import (
    apply_channel,
    apply_kraus,
    decoherence_minimum,
    superposition_state,
)
from .entangle import (
    conjecture9_gap,
    haar_pure_state,
    info_gap_report,
    isotropic_state,
    isotropic_tangle_d3,
    maximally_entangled,
    mixed_complementarity_defect,
    pure_complementarity_residual,
    pure_tangle,
    subadditivity_counterexample,
)
from .gf import field_new, trace
from .helpers import log_status, random_density_entries, random_unitary, stream_rng
from .invinfo import (
    additivity_probe,
    invariant_info_closed,
    invariant_info_mub,
    invariant_info_qubits,
    local_informations,
)
from .mub import build_mubs, verify_mubs
from .qlinalg import basis_state, density_from_pure, maximally_mixed
from .state_types import (
    CHANNEL_KINDS,
    ChannelSpec,
    CheckResult,
    DensityMatrix,
    DomainError,
    IsotropicParams,
    MubSet,
    RunOptions,
    SuiteReport,
)
from .sweeps import decoherence_grid, decoherence_sweep

SuiteFn = Callable[[np.random.Generator, RunOptions], List[CheckResult]]

MUB_DIMS = (2, 3, 4, 5, 7, 8, 9)
INFO_DIMS = (2, 3, 4, 5, 7, 9)
GF_CASES = ((2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 5))
EXHAUSTIVE_FIELD_ORDER = 9
CHANNEL_P_VALUES = (0.0, 0.25, 0.5, 0.75, 1.0)
POSITIVE_MINIMUM_BITS = 0.05


def _tol(options: RunOptions, default: float) -> float:
    return options.tol if options.tol is not None else default


def _samples(options: RunOptions, default: int) -> int:
    return options.samples if options.samples is not None else default


def _check(
    name: str,
    worst: float,
    tolerance: float,
    samples: int,
    detail: Optional[str] = None,
    reported_only: bool = False,
) -> CheckResult:
    return CheckResult(
        name=name,
        worst_residual=float(worst),
        tolerance=tolerance,
        passed=bool(worst <= tolerance),
        reported_only=reported_only,
        samples=samples,
        detail=detail,
    )


def _random_mixed(rng: np.random.Generator, dims: List[int]) -> DensityMatrix:
    return DensityMatrix(entries=random_density_entries(rng, math.prod(dims)), dims=dims)


def suite_gf(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    """Field axioms, inverses and trace additivity; exhaustive up to order 9, sampled above."""
    checks = []
    n_random = _samples(options, 1000)
    for p, k in GF_CASES:
        f = field_new(p, k)
        elems = f.elements()
        q = f.order
        if q <= EXHAUSTIVE_FIELD_ORDER:
            triples = list(itertools.product(elems, repeat=3))
        else:
            idx = rng.integers(0, q, size=(n_random, 3))
            triples = [(elems[i], elems[j], elems[m]) for i, j, m in idx]

        failures = 0
        for a, b, c in triples:
            failures += a + b != b + a
            failures += a * b != b * a
            failures += (a + b) + c != a + (b + c)
            failures += (a * b) * c != a * (b * c)
            failures += a * (b + c) != a * b + a * c
        checks.append(_check(f"gf-axioms-GF({q})", failures, 0, len(triples)))

        inv_fail = sum(x * x ** (q - 2) != f.one for x in elems[1:])
        order_fail = sum(x ** (q - 1) != f.one for x in elems[1:])
        checks.append(_check(f"gf-inverse-GF({q})", inv_fail + order_fail, 0, q - 1))

        pairs = list(itertools.product(elems, repeat=2)) if q <= EXHAUSTIVE_FIELD_ORDER else [t[:2] for t in triples]
        trace_fail = sum((trace(a + b) - trace(a) - trace(b)) % p != 0 for a, b in pairs)
        checks.append(_check(f"gf-trace-additive-GF({q})", trace_fail, 0, len(pairs)))
    return checks


def suite_mub(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    tol = _tol(options, 1e-10)
    checks = []
    for d in MUB_DIMS:
        mubs = build_mubs(d)
        report = verify_mubs(mubs, tol)
        worst = max(report.max_overlap_error, report.max_trace_identity_error, report.orthonormality_error)
        checks.append(_check(f"mub-d{d}", worst, tol, report.num_bases, detail=mubs.construction_tag))
    return checks


def suite_eq2_eq4(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    """MUB outcome sum against the purity closed form, plus invariances and additivity."""
    tol = _tol(options, 1e-9)
    n = _samples(options, 500)
    checks = []
    for d in INFO_DIMS:
        mubs = build_mubs(d)
        perm = rng.permutation(d)
        shuffled = MubSet(dim=d, bases=[np.asarray(b)[:, perm] for b in reversed(mubs.bases)])
        worst = worst_perm = worst_unitary = 0.0
        for _ in range(n):
            rho = _random_mixed(rng, [d])
            closed = invariant_info_closed(rho).bits
            worst = max(worst, abs(invariant_info_mub(rho, mubs).bits - closed))
            worst_perm = max(worst_perm, abs(invariant_info_mub(rho, shuffled).bits - closed))
            U = random_unitary(rng, d)
            rotated = U @ rho.entries @ U.conj().T
            rotated = DensityMatrix(entries=0.5 * (rotated + rotated.conj().T), dims=[d])
            worst_unitary = max(worst_unitary, abs(invariant_info_closed(rotated).bits - closed))
        checks.append(_check(f"mub-sum-vs-closed-form-d{d}", worst, tol, n))
        checks.append(_check(f"basis-relabel-invariance-d{d}", worst_perm, tol, n))
        checks.append(_check(f"unitary-invariance-d{d}", worst_unitary, _tol(options, 1e-10), n))

    worst_qubits = 0.0
    for k in (1, 2, 3):
        for _ in range(n // 10 or 1):
            rho = _random_mixed(rng, [2] * k)
            worst_qubits = max(worst_qubits, abs(invariant_info_qubits(rho).bits - invariant_info_closed(rho).bits))
    checks.append(_check("qubit-form-vs-closed-form", worst_qubits, _tol(options, 1e-12), 3 * (n // 10 or 1)))

    pure = density_from_pure(basis_state(0, [2]))
    pure_pair = additivity_probe(pure, density_from_pure(basis_state(1, [2])))
    mixed_pair = additivity_probe(maximally_mixed([2]), maximally_mixed([2]))
    checks.append(_check("additivity-pure-pure", abs(pure_pair.gap), _tol(options, 1e-10), 1))
    checks.append(_check("additivity-mixed-mixed", abs(mixed_pair.gap), _tol(options, 1e-10), 1))
    generic = additivity_probe(pure, DensityMatrix(entries=np.diag([0.75, 0.25]), dims=[2]))
    checks.append(
        _check(
            "additivity-pure-mixed",
            abs(generic.gap),
            _tol(options, 1e-10),
            1,
            detail=f"lhs={generic.lhs!r} rhs={generic.rhs!r}",
            reported_only=True,
        )
    )
    return checks


def suite_eq5(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    tol = _tol(options, 1e-9)
    n = _samples(options, 1000)
    worst = max(abs(pure_complementarity_residual(haar_pure_state([3, 3], rng))) for _ in range(n))
    max_ent = abs(pure_complementarity_residual(maximally_entangled(3)))
    product = abs(pure_complementarity_residual(basis_state(0, [3, 3])))
    return [
        _check("pure-complementarity-d3", worst, tol, n),
        _check("pure-complementarity-maximally-entangled", max_ent, tol, 1),
        _check("pure-complementarity-product", product, tol, 1),
    ]


def suite_eq6(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    tol = _tol(options, 1e-9)
    n = _samples(options, 1000)
    checks = []
    for d, count in ((2, n), (3, n), (5, max(n // 5, 1))):
        lowest = min(mixed_complementarity_defect(_random_mixed(rng, [d, d])) for _ in range(count))
        checks.append(
            _check(f"mixed-complementarity-d{d}", max(0.0, -lowest), tol, count, detail=f"min defect {lowest!r}")
        )
    iso = min(mixed_complementarity_defect(isotropic_state(IsotropicParams(3, F))) for F in np.linspace(0, 1, 6))
    checks.append(_check("mixed-complementarity-isotropic-d3", max(0.0, -iso), tol, 6))
    return checks


def suite_eq10(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    tol = _tol(options, 1e-9)
    n = _samples(options, 200)
    worst = max(
        abs(info_gap_report(_random_mixed(rng, [3, 3]), check_bounds=False).purification_residual) for _ in range(n)
    )
    return [_check("purified-cut-identity-d3", worst, tol, n)]


def suite_eq12(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    tol = _tol(options, 1e-9)
    n = _samples(options, 500)
    checks = []
    for d in (2, 3):
        worst = 0.0
        for _ in range(n):
            r = info_gap_report(_random_mixed(rng, [d, d]), check_bounds=False)
            worst = max(worst, r.lower_bound - r.gap, r.gap - r.upper_bound, 0.0)
        checks.append(_check(f"gap-sandwich-d{d}", worst, tol, n))
        top = info_gap_report(density_from_pure(maximally_entangled(d)))
        checks.append(_check(f"gap-upper-attained-d{d}", abs(top.gap - top.upper_bound), _tol(options, 1e-10), 1))
    return checks


def suite_gap_example(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    report = info_gap_report(subadditivity_counterexample(), check_bounds=False)
    sandwich = max(report.lower_bound - report.gap, report.gap - report.upper_bound, 0.0)
    return [
        _check("gap-example-value", abs(report.gap + 5.0 / 54.0), _tol(options, 1e-12), 1, detail=f"gap={report.gap!r}"),
        _check("gap-example-sandwich", sandwich, _tol(options, 1e-9), 1, detail=report.tangle_method),
    ]


def suite_isotropic(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    tol = _tol(options, 1e-10)
    grid = np.linspace(0.0, 1.0, 101)
    worst_info = worst_local = 0.0
    for F in grid:
        rho = isotropic_state(IsotropicParams(3, float(F)))
        closed = (81 * F * F - 18 * F + 1) / 32 * math.log2(3)
        worst_info = max(worst_info, abs(invariant_info_closed(rho).bits - closed))
        worst_local = max(worst_local, *local_informations(rho))
    tau_top = abs(isotropic_tangle_d3(1.0) - pure_tangle(maximally_entangled(3)))
    return [
        _check("isotropic-info-closed-form", worst_info, tol, len(grid)),
        _check("isotropic-local-info-zero", worst_local, tol, len(grid)),
        _check("isotropic-tangle-maximally-entangled", tau_top, tol, 1),
    ]


def suite_channels(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    n = _samples(options, 200)
    worst_trace = worst_neg = worst_kraus = 0.0
    for _ in range(n):
        rho = _random_mixed(rng, [2, 2])
        for kind in CHANNEL_KINDS:
            for p in CHANNEL_P_VALUES:
                spec = ChannelSpec(kind=kind, p=p)
                out = apply_channel(rho, spec)
                worst_trace = max(worst_trace, abs(np.trace(out.entries).real - 1.0))
                worst_neg = max(worst_neg, -float(np.linalg.eigvalsh(out.entries)[0]))
                worst_kraus = max(worst_kraus, float(np.max(np.abs(out.entries - apply_kraus(rho, spec).entries))))
    samples = n * len(CHANNEL_KINDS) * len(CHANNEL_P_VALUES)

    start = density_from_pure(superposition_state(0.6))
    ground = apply_channel(start, ChannelSpec(kind="dissipation", p=1.0))
    ground_err = float(np.max(np.abs(ground.entries - density_from_pure(basis_state(0, [2, 2])).entries)))

    checks = [
        _check("trace-preservation", worst_trace, _tol(options, 1e-12), samples),
        _check("positivity", max(worst_neg, 0.0), _tol(options, 1e-10), samples),
        _check("kraus-agreement", worst_kraus, _tol(options, 1e-10), samples),
        _check("dissipation-ground-state", ground_err, _tol(options, 1e-12), 1),
    ]

    grid = decoherence_grid()
    points = len(grid.axis("a").values()) * len(grid.axis("p").values())
    for kind in CHANNEL_KINDS:
        bits, a, p = decoherence_minimum(kind, grid)
        where = f"min {bits!r} bits at a={a!r}, p={p!r}"
        if kind == "depolarization":
            checks.append(_check("minimum-depolarization-zero", bits, _tol(options, 1e-10), points, detail=where))
        else:
            # the reported minima are compared against a floor, so the residual is the shortfall
            shortfall = max(POSITIVE_MINIMUM_BITS - bits, 0.0)
            checks.append(
                _check(
                    f"minimum-{kind}-positive",
                    shortfall,
                    0.0,
                    points,
                    detail=where,
                    reported_only=kind == "dissipation",
                )
            )
    return checks


def suite_depolarization(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    quiet = RunOptions(seed=options.seed, max_workers=options.max_workers, verbose=False)
    rows = decoherence_sweep("depolarization", options=quiet)
    worst = max(abs(r["I_bits"] - r["I_closed"]) for r in rows)
    at_one = max(abs(r["I_bits"]) for r in rows if r["p"] == 1.0)
    at_zero = max(abs(r["I_bits"] - 2.0) for r in rows if r["p"] == 0.0)

    increase = 0.0
    by_a: Dict[float, List[float]] = {}
    for r in rows:
        by_a.setdefault(r["a"], []).append(r["I_bits"])
    for series in by_a.values():
        increase = max(increase, max((b - a for a, b in zip(series, series[1:])), default=0.0))

    return [
        _check("depolarization-closed-form", worst, _tol(options, 1e-10), len(rows)),
        _check("depolarization-p1-zero", at_one, _tol(options, 1e-12), len(by_a)),
        _check("depolarization-p0-two-bits", at_zero, _tol(options, 1e-12), len(by_a)),
        _check("depolarization-monotone-in-p", max(increase, 0.0), _tol(options, 1e-12), len(rows)),
    ]


def suite_conjecture9(rng: np.random.Generator, options: RunOptions) -> List[CheckResult]:
    tol = _tol(options, 1e-9)
    probes = [conjecture9_gap(float(F)) for F in np.linspace(0.0, 1.0, 101)]
    worst = max(max(pr.lhs - pr.rhs, 0.0) for pr in probes)
    for pr in probes:
        if not pr.satisfied:
            log_status(f"{pr.label} violated at F = {pr.F!r}: lhs {pr.lhs!r} > rhs {pr.rhs!r}", icon="   ⚠️ ")
    equality = max(abs(pr.lhs - pr.rhs) for pr in map(conjecture9_gap, (1.0, 1.0 / 9.0)))
    return [
        _check("conjecture-probe", worst, tol, len(probes), reported_only=True),
        _check("conjecture-equality-points", equality, tol, 2, reported_only=True),
    ]


SUITES: Dict[str, SuiteFn] = {
    "gf": suite_gf,
    "mub": suite_mub,
    "eq2-eq4": suite_eq2_eq4,
    "eq5": suite_eq5,
    "eq6": suite_eq6,
    "eq10": suite_eq10,
    "eq12": suite_eq12,
    "gap-example": suite_gap_example,
    "isotropic": suite_isotropic,
    "channels": suite_channels,
    "depolarization": suite_depolarization,
    "conjecture9": suite_conjecture9,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def _run_one(name: str, options: RunOptions) -> List[CheckResult]:
    log_status(f"Suite `{name}`", verbose=options.verbose)
    rng = stream_rng(options.seed, name)
    checks = []
    for check in SUITES[name](rng, options):
        checks.append(check)
        if check.passed:
            log_status(f"{check.name}: {check.worst_residual:.3e} <= {check.tolerance:.1e}", icon="   ✅", verbose=options.verbose)
        elif check.reported_only:
            log_status(f"{check.name} (reported only): {check.detail or check.worst_residual}", icon="   ⚠️ ")
        else:
            log_status(f"{check.name}: {check.worst_residual:.3e} > {check.tolerance:.1e}", icon="   ❌", verbose=options.verbose)
    return checks


def run_suite(name: str, options: Optional[RunOptions] = None) -> SuiteReport:
    """
    Run one named suite, or every suite for 'all'.

    :raises DomainError: unknown suite name
    """
    options = options or RunOptions()
    if name not in SUITE_NAMES:
        raise DomainError(f"Unknown suite '{name}'. Must be one of {SUITE_NAMES}")

    start_time = time.perf_counter()
    names = list(SUITES) if name == "all" else [name]
    report = SuiteReport(suite=name, seed=options.seed)
    for n in names:
        suite_start = time.perf_counter()
        checks = _run_one(n, options)
        elapsed = (time.perf_counter() - suite_start) * 1000.0
        for c in checks:
            c.duration_ms = elapsed
        report.checks.extend(checks)
    report.total_duration_ms = (time.perf_counter() - start_time) * 1000.0
    log_status(
        f"{name}: {'passed' if report.passed else 'FAILED'} ({len(report.checks)} checks) ===",
        icon="===",
        verbose=options.verbose,
    )
    return report
