"""Command line entry point: ``ndautonomy <command> ...``.

Exit codes: 0 success, 1 parse or validation error, 2 precondition violation,
3 Groebner step limit (``AUTONOMY_GB_STEP_LIMIT``) exceeded.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from .behavior import analyze
from .control import SublatticeEmbedding, degree_by_restriction_oracle, restrict, strength
from .errors import ParseError, PreconditionError
from .genericity import (
    SampleSpec,
    expt_controller_strength,
    expt_generic_degree,
    expt_regular_sequences,
    expt_unit_ideal,
)
from .groebner import StepLimitExceeded
from .textio import INFINITY, format_system, parse_system, report_to_dict, write_report

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_STEP_LIMIT = 0, 1, 2, 3


def _load(path: str):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_system(text)


def _emit(payload, fmt: str):
    sys.stdout.buffer.write(write_report(payload, fmt))
    sys.stdout.flush()


def cmd_analyze(args):
    _emit(analyze(_load(args.input)), args.format)


def cmd_strength(args):
    _emit(strength(_load(args.plant), _load(args.controller)), args.format)


def _indices(text: str, n: int) -> tuple:
    try:
        idx = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise ParseError(f"--keep expects comma-separated integers, got {text!r}") from None
    if not idx or idx[0] < 1 or idx[-1] > n:
        raise ParseError(f"--keep indices must lie in 1..{n}")
    return tuple(i - 1 for i in idx)


def cmd_restrict(args):
    M = _load(args.input)
    if M.k != 1:
        raise PreconditionError(f"restrict supports scalar systems only (k=1), got k={M.k}")
    R = restrict(M, SublatticeEmbedding(M.n, _indices(args.keep, M.n)))
    report = report_to_dict(analyze(R))
    report["system"] = format_system(R)
    _emit(report, args.format)


def cmd_oracle(args):
    M = _load(args.input)
    d = degree_by_restriction_oracle(M)
    _emit({"n": M.n, "k": M.k, "rows": M.l,
           "degree_of_autonomy": INFINITY if d == float("inf") else d}, args.format)


def _coeff_range(text: str):
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m:
        raise ParseError(f"--coeff-range expects lo..hi, got {text!r}")
    return int(m.group(1)), int(m.group(2))


def cmd_sample(args):
    lo, hi = _coeff_range(args.coeff_range)
    try:
        density = Fraction(args.density)
        spec = SampleSpec(n=args.n, k=args.k, rows=args.rows, degree=args.degree, coeff_low=lo,
                          coeff_high=hi, density=density, seed=args.seed)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc)) from None
    if args.experiment == "degree":
        stats = expt_generic_degree(spec, args.trials, workers=args.workers)
    elif args.experiment == "regseq":
        stats = expt_regular_sequences(spec, args.trials, workers=args.workers)
    elif args.experiment == "unit":
        stats = expt_unit_ideal(spec, args.trials, workers=args.workers)
    else:
        if args.controller_rows is None:
            raise PreconditionError("--experiment strength needs --controller-rows")
        ctrl = SampleSpec(n=args.n, k=args.k, rows=args.controller_rows, degree=args.degree,
                          coeff_low=lo, coeff_high=hi, density=density, seed=args.seed)
        stats = expt_controller_strength(spec, ctrl, args.trials, workers=args.workers)
    _emit(stats, args.format)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ndautonomy", description="Degree of autonomy of n-D behaviors.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp):
        sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = sub.add_parser("analyze", help="classify a system file")
    sp.add_argument("--input", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("strength", help="strength of a controller with respect to a plant")
    sp.add_argument("--plant", required=True)
    sp.add_argument("--controller", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_strength)

    sp = sub.add_parser("restrict", help="restrict a scalar system to a coordinate sublattice")
    sp.add_argument("--input", required=True)
    sp.add_argument("--keep", required=True, help="comma-separated 1-based lattice directions")
    fmt(sp)
    sp.set_defaults(func=cmd_restrict)

    sp = sub.add_parser("oracle", help="degree of autonomy from the restriction definition (k=1)")
    sp.add_argument("--input", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("sample", help="Monte-Carlo genericity experiment")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--rows", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--coeff-range", default="-5..5",
                    help="integer range lo..hi; write --coeff-range=-5..5 when lo is negative")
    sp.add_argument("--density", default="1")
    sp.add_argument("--experiment", choices=("degree", "regseq", "unit", "strength"), default="degree")
    sp.add_argument("--controller-rows", type=int)
    sp.add_argument("--workers", type=int, default=None)
    fmt(sp)
    sp.set_defaults(func=cmd_sample)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; those are parse errors here
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        args.func(args)
    except StepLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STEP_LIMIT
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
