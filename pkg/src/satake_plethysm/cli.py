"""Command line interface.

Exit codes: 0 success, 1 failed verification or a domain error (reported
as JSON on stderr), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from contextlib import redirect_stderr
from fractions import Fraction

from .basic_function import (
    CONSISTENT,
    PRINTED,
    SatakeParams,
    basic_function,
    euler_factor_series,
    trace_series,
)
from .errors import CapExceeded, DomainError, MethodUnsupported, OutOfRange
from .partitions import count_partitions, gaussian_coefficients
from .plethysm import (
    multiplicity_generic,
    multiplicity_k3_closed,
    multiplicity_k3_residue,
    multiplicity_k4_closed,
    multiplicity_k4_recursive,
    multiplicity_vector,
    oracle_multiplicities,
    signed_sequence,
)
from .verify import SUITES, run_suite

MAX_ELL_CAP = 1000
MAX_J_CAP = 200
_CONVENTIONS = {"consistent": CONSISTENT, "printed": PRINTED}
_RATIONAL = re.compile(r"[+-]?[0-9]+(/[0-9]+)?\Z")


class _UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    if not _RATIONAL.match(text):
        raise argparse.ArgumentTypeError(f"expected P/Q, got {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise argparse.ArgumentTypeError(f"zero denominator in {text!r}")
    return Fraction(text)


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="satake-plethysm",
        description="Bounded partition counts, GL2 plethysm multiplicities and basic functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="p(j, k, n)")
    p.add_argument("--j", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--n", type=_integer, required=True)

    p = sub.add_parser("gauss", help="Gaussian polynomial coefficients")
    p.add_argument("--j", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--signed", action="store_true", help="coefficients of (1-q) times the Gaussian")

    p = sub.add_parser("multiplicity", help="N(j, k, n)")
    p.add_argument("--j", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--n", type=_integer, required=True)
    p.add_argument("--method", choices=["generic", "closed", "residue", "recursive", "oracle"], default="generic")

    p = sub.add_parser("table", help="full N-table for k = 3 or 4")
    p.add_argument("--k", type=int, choices=[3, 4], required=True)
    p.add_argument("--max-j", type=_nonneg, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")

    p = sub.add_parser("verify", help="run an identity suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], required=True)
    p.add_argument("--max-ell", type=_nonneg)
    p.add_argument("--max-j", type=_nonneg)

    p = sub.add_parser("basic-fn", help="truncated basic function of Sym^3 or Sym^4")
    p.add_argument("--sym", type=int, choices=[3, 4], required=True)
    p.add_argument("--max-j", type=_nonneg, required=True)
    p.add_argument("--convention", choices=sorted(_CONVENTIONS), default="consistent")
    p.add_argument("--basis", choices=["sym-det", "cartan"], default="sym-det")
    p.add_argument("--format", choices=["json", "text"], default="json")

    p = sub.add_parser("trace-check", help="compare Hecke traces with the Euler factor")
    p.add_argument("--sym", type=int, choices=[3, 4], required=True)
    p.add_argument("--alpha", type=_rational, required=True)
    p.add_argument("--beta", type=_rational, required=True)
    p.add_argument("--max-j", type=_nonneg, required=True)
    return parser


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _multiplicity(j: int, k: int, n: int, method: str) -> int:
    if method == "generic":
        return multiplicity_generic(j, k, n)
    if method == "oracle":
        if n < 0 or n > j * k // 2:
            raise OutOfRange(f"oracle route covers 0 <= n <= {j * k // 2}, got n={n}")
        return oracle_multiplicities(j, k).get(n, 0)
    if method == "closed" and k == 3:
        return multiplicity_k3_closed(j, n)
    if method == "closed" and k == 4:
        return multiplicity_k4_closed(j, n)
    if method == "residue" and k == 3:
        return multiplicity_k3_residue(j, n)
    if method == "recursive" and k == 4:
        return multiplicity_k4_recursive(j, n)
    raise MethodUnsupported(f"method {method!r} is not available for k={k}")


def _table(k: int, max_j: int, fmt: str) -> str:
    if fmt == "json":
        rows = [{"j": j, "N": list(multiplicity_vector(j, k).values)} for j in range(max_j + 1)]
        return _dump({"schema": "v1", "k": k, "maxJ": max_j, "rows": rows})
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["j", "n", "N"])
    for j in range(max_j + 1):
        for n, value in enumerate(multiplicity_vector(j, k).values):
            writer.writerow([j, n, value])
    return buf.getvalue()


def _check_caps(args):
    if args.max_ell is not None and args.max_ell > MAX_ELL_CAP:
        raise CapExceeded(f"--max-ell {args.max_ell} exceeds the cap {MAX_ELL_CAP}")
    if args.max_j is not None and args.max_j > MAX_J_CAP:
        raise CapExceeded(f"--max-j {args.max_j} exceeds the cap {MAX_J_CAP}")


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "count":
        out.write(f"{count_partitions(args.j, args.k, args.n)}\n")
    elif cmd == "gauss":
        seq = signed_sequence(args.j, args.k) if args.signed else gaussian_coefficients(args.j, args.k)
        out.write(json.dumps(list(seq.coeffs)) + "\n")
    elif cmd == "multiplicity":
        out.write(f"{_multiplicity(args.j, args.k, args.n, args.method)}\n")
    elif cmd == "table":
        text = _table(args.k, args.max_j, args.format)
        if args.out == "-":
            out.write(text)
        else:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
    elif cmd == "verify":
        _check_caps(args)
        report = run_suite(args.suite, args.max_ell, args.max_j)
        out.write(_dump(report.to_record()))
        return 0 if report.ok else 1
    elif cmd == "basic-fn":
        series = basic_function(args.sym, args.max_j, _CONVENTIONS[args.convention])
        if args.format == "json":
            out.write(_dump({"schema": "v1", **series.to_record(args.basis)}))
        else:
            out.write(series.render_text(args.basis) + "\n")
    elif cmd == "trace-check":
        try:
            params = SatakeParams(args.alpha, args.beta)
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        series = basic_function(args.sym, args.max_j)
        traces = trace_series(series, params)
        eulers = euler_factor_series(args.sym, params, args.max_j)
        rows = [{"j": j, "trace": str(a), "euler": str(b), "match": a == b}
                for j, (a, b) in enumerate(zip(traces, eulers))]
        ok = all(r["match"] for r in rows)
        out.write(_dump({
            "schema": "v1",
            "sym": args.sym,
            "alpha": str(params.alpha),
            "beta": str(params.beta),
            "maxJ": args.max_j,
            "rows": rows,
            "verdict": "pass" if ok else "fail",
        }))
        return 0 if ok else 1
    return 0


def _glue_negative_values(argv):
    # argparse reads "-1/2" as an option; bind it to its flag instead
    out = []
    for token in argv:
        if out and out[-1] in ("--alpha", "--beta") and token.startswith("-"):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def run(argv=None, out=None, err=None) -> int:
    """Parse ``argv`` and execute; returns the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = _glue_negative_values(sys.argv[1:] if argv is None else list(argv))
    parser = build_parser()
    try:
        with redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except _UsageError as exc:
        parser.print_usage(err)
        err.write(f"error: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(json.dumps({"schema": "v1", "error": exc.kind, "message": str(exc)}) + "\n")
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
