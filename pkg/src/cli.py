# cli.py
# Command-line front end for qinvar
# Author: qinvar developers

"""
qinvar command line.

    qinvar mub 9 --dump bases.csv
    qinvar isotropic-sweep --steps 101 --out isotropic.csv
    qinvar decoherence-sweep --kind dephasing --out dephasing.csv
    qinvar verify --suite eq5 --seed 7

Exit codes: 0 success, 1 a check failed, 2 usage or domain error.
Reports and CSV go to stdout; status lines go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .adapters import adapter_for_path, get_adapter
from .helpers import SEED_ENV_VAR, log_status, resolve_seed
from .mub import DEFAULT_TOL, build_mubs, dump_mubs, verify_mubs
from .state_types import CHANNEL_KINDS, QinvarError, RunOptions
from .sweeps import DEFAULT_STEPS, decoherence_grid, decoherence_sweep, isotropic_grid, isotropic_sweep
from .verify import SUITE_NAMES, run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _options(args: argparse.Namespace) -> RunOptions:
    return RunOptions(
        seed=resolve_seed(getattr(args, "seed", None)),
        tol=getattr(args, "tol", None),
        max_workers=getattr(args, "workers", 1),
        verbose=not args.quiet,
        samples=getattr(args, "samples", None),
        output_format=getattr(args, "format", None),
    )


def cmd_mub(args: argparse.Namespace) -> int:
    options = _options(args)
    mubs = build_mubs(args.d)
    report = verify_mubs(mubs, args.tol if args.tol is not None else DEFAULT_TOL)
    log_status(f"{report.num_bases} bases in dimension {report.dim} ({mubs.construction_tag})", verbose=options.verbose)
    if args.dump:
        count = dump_mubs(mubs, args.dump, options.output_format)
        log_status(f"Saved {count} basis entries to {args.dump}", icon="   💾", verbose=options.verbose)
    print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _write_rows(rows, args: argparse.Namespace, options: RunOptions) -> None:
    adapter_for_path(args.out, options.output_format).write(rows)
    if args.out:
        log_status(f"Saved {len(rows)} rows to {args.out}", icon="   💾", verbose=options.verbose)


def cmd_isotropic_sweep(args: argparse.Namespace) -> int:
    options = _options(args)
    rows = isotropic_sweep(isotropic_grid(args.steps), d=args.d, options=options)
    _write_rows(rows, args, options)
    return EXIT_OK


def cmd_decoherence_sweep(args: argparse.Namespace) -> int:
    options = _options(args)
    rows = decoherence_sweep(args.kind, decoherence_grid(args.steps), options=options)
    _write_rows(rows, args, options)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    options = _options(args)
    report = run_suite(args.suite, options)
    # the report itself carries no wall-clock timings
    log_status(f"{report.total_duration_ms:.1f} ms", icon="   ⏱️ ", verbose=options.verbose)
    data = report.to_dict(include_timings=False)
    if args.out:
        get_adapter("json", file_path=args.out).write(data)
        log_status(f"Saved report to {args.out}", icon="   💾", verbose=options.verbose)
    get_adapter("json").write(data)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qinvar", description="Invariant information toolkit for qudits")
    parser.add_argument("--quiet", action="store_true", help="Suppress status lines on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mub", help="Build and verify d+1 mutually unbiased bases")
    p.add_argument("d", type=int, help="Prime-power dimension <= 32")
    p.add_argument("--tol", type=float, default=None, help=f"Verification tolerance (default {DEFAULT_TOL})")
    p.add_argument("--dump", default=None, help="Write every basis entry to this file (.csv, .json, .xlsx)")
    p.add_argument("--format", choices=["csv", "json", "xlsx"], default=None, help="Override the dump format")
    p.set_defaults(func=cmd_mub)

    p = sub.add_parser("isotropic-sweep", help="Local information and conjecture sides over isotropic fidelity")
    p.add_argument("--d", type=int, default=3, help="Local dimension (only 3 is supported)")
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS, help="Grid points on F in [0, 1]")
    p.add_argument("--out", default=None, help="Output file; CSV on stdout when omitted")
    p.add_argument("--format", choices=["csv", "json", "xlsx"], default=None, help="Override the output format")
    p.add_argument("--workers", type=int, default=1, help="Thread pool size for grid evaluation")
    p.set_defaults(func=cmd_isotropic_sweep)

    p = sub.add_parser("decoherence-sweep", help="Local information of a|00> + b|11> under a decoherence channel")
    p.add_argument("--kind", choices=list(CHANNEL_KINDS), required=True)
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS, help="Grid points per axis on (a, p) in [0, 1]^2")
    p.add_argument("--out", default=None, help="Output file; CSV on stdout when omitted")
    p.add_argument("--format", choices=["csv", "json", "xlsx"], default=None, help="Override the output format")
    p.add_argument("--workers", type=int, default=1, help="Thread pool size for grid evaluation")
    p.set_defaults(func=cmd_decoherence_sweep)

    p = sub.add_parser("verify", help="Run a named property suite and print a JSON report")
    p.add_argument("--suite", choices=list(SUITE_NAMES), default="all")
    p.add_argument("--seed", type=int, default=None, help=f"Random seed (--seed > env {SEED_ENV_VAR} > 0)")
    p.add_argument("--samples", type=int, default=None, help="Override per-suite random sample counts")
    p.add_argument("--tol", type=float, default=None, help="Override every check tolerance")
    p.add_argument("--out", default=None, help="Also write the JSON report to this file")
    p.add_argument("--workers", type=int, default=1, help="Thread pool size for sweep-backed checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        return args.func(args)
    except QinvarError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
