# sweeps.py
# Grid drivers behind the isotropic and decoherence sweeps
# Author: qinvar developers

"""
Each sweep turns a SweepGrid into a list of row dicts in grid order.

Grid points are independent. With RunOptions.max_workers > 1 they are
evaluated on a thread pool; executor.map keeps the row order fixed.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, TypeVar

from .channels import local_info_after_channel, local_info_depolarized_closed
from .entangle import conjecture9_gap, isotropic_state, isotropic_tangle_d3
from .helpers import log_status
from .invinfo import local_informations
from .state_types import (
    CHANNEL_KINDS,
    ChannelKind,
    ChannelSpec,
    DomainError,
    GridAxis,
    IsotropicParams,
    RunOptions,
    SweepGrid,
)
from .validator import validate_grid

T = TypeVar("T")
Row = Dict[str, Any]

UNIT_DOMAINS = {"F": (0.0, 1.0), "a": (0.0, 1.0), "p": (0.0, 1.0)}
DEFAULT_STEPS = 101
CONJECTURE_TOL = 1e-9
CLOSED_FORM_TOL = 1e-10


def _checked(grid: SweepGrid, required: Sequence[str]) -> SweepGrid:
    names = [ax.name for ax in grid.axes]
    missing = [r for r in required if r not in names]
    if missing:
        raise DomainError(f"Sweep grid is missing axes {missing}; has {names}")
    result = validate_grid(grid, UNIT_DOMAINS)
    if not result.is_valid:
        raise DomainError(f"Invalid sweep grid: {result.summary()}")
    return grid


def _evaluate(fn: Callable[[T], Row], points: Iterable[T], options: RunOptions) -> List[Row]:
    points = list(points)
    if options.max_workers > 1:
        with ThreadPoolExecutor(max_workers=options.max_workers) as pool:
            return list(pool.map(fn, points))
    return [fn(pt) for pt in points]


def isotropic_grid(steps: int = DEFAULT_STEPS) -> SweepGrid:
    return SweepGrid(axes=[GridAxis(name="F", min=0.0, max=1.0, steps=steps)])


def decoherence_grid(steps: int = DEFAULT_STEPS) -> SweepGrid:
    return SweepGrid(
        axes=[
            GridAxis(name="a", min=0.0, max=1.0, steps=steps),
            GridAxis(name="p", min=0.0, max=1.0, steps=steps),
        ]
    )


def _isotropic_row(F: float) -> Row:
    rho = isotropic_state(IsotropicParams(d=3, F=F))
    i1, i2 = local_informations(rho)
    probe = conjecture9_gap(F, d=3)
    return {
        "F": F,
        "I1": i1,
        "I2": i2,
        "tangle_eq8": isotropic_tangle_d3(F),
        "lhs": probe.lhs,
        "rhs": probe.rhs,
    }


def isotropic_sweep(
    grid: Optional[SweepGrid] = None,
    d: int = 3,
    options: Optional[RunOptions] = None,
) -> List[Row]:
    """
    Local informations, tangle and both conjecture sides for the two-qutrit isotropic family.

    Rows: F, I1, I2, tangle_eq8, lhs, rhs. Rows with lhs > rhs are logged, never dropped.

    :raises DomainError: d other than 3, or a grid without an F axis in [0, 1]
    """
    options = options or RunOptions()
    if d != 3:
        raise DomainError(f"Isotropic sweep needs the d = 3 tangle formula, got d = {d}")
    grid = _checked(grid or isotropic_grid(), ["F"])
    values = [float(F) for F in grid.axis("F").values()]

    log_status(f"Isotropic sweep over {len(values)} fidelities (d = {d})", verbose=options.verbose)
    rows = _evaluate(_isotropic_row, values, options)

    violations = [r for r in rows if r["lhs"] > r["rhs"] + CONJECTURE_TOL]
    for r in violations:
        log_status(f"conjecture probe violated at F = {r['F']!r}: lhs {r['lhs']!r} > rhs {r['rhs']!r}", icon="   ⚠️ ")
    if not violations:
        log_status(f"lhs <= rhs on all {len(rows)} rows", icon="   ✅", verbose=options.verbose)
    return rows


def decoherence_sweep(
    kind: ChannelKind,
    grid: Optional[SweepGrid] = None,
    options: Optional[RunOptions] = None,
) -> List[Row]:
    """
    Local information of a|00> + sqrt(1-a^2)|11> with both qubits sent through the channel.

    Rows: a, p, I_bits, plus I_closed for depolarization.

    :raises DomainError: unknown kind, or a grid without a and p axes in [0, 1]
    """
    options = options or RunOptions()
    if kind not in CHANNEL_KINDS:
        raise DomainError(f"Unknown channel kind '{kind}'. Must be one of {CHANNEL_KINDS}")
    grid = _checked(grid or decoherence_grid(), ["a", "p"])
    points = [(float(a), float(p)) for a in grid.axis("a").values() for p in grid.axis("p").values()]

    def row(point) -> Row:
        a, p = point
        out: Row = {"a": a, "p": p, "I_bits": local_info_after_channel(a, ChannelSpec(kind=kind, p=p))}
        if kind == "depolarization":
            out["I_closed"] = local_info_depolarized_closed(a, p)
        return out

    log_status(f"Decoherence sweep ({kind}) over {len(points)} grid points", verbose=options.verbose)
    rows = _evaluate(row, points, options)

    if kind == "depolarization":
        worst = max(abs(r["I_bits"] - r["I_closed"]) for r in rows)
        if worst > CLOSED_FORM_TOL:
            log_status(f"closed form deviates by {worst:.3e} bits", icon="   ⚠️ ")
    lowest = min(rows, key=lambda r: r["I_bits"])
    log_status(
        f"minimum {lowest['I_bits']:.6g} bits at a = {lowest['a']:.4g}, p = {lowest['p']:.4g}",
        icon="   ✅",
        verbose=options.verbose,
    )
    return rows

