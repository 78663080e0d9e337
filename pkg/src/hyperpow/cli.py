"""Command-line front end: ``hyperpow {eval,coeffs,verify,bench}``.

Exit codes: 0 success, 1 an identity check failed, 2 usage or domain
error, 3 numerical non-convergence.  Data goes to stdout, diagnostics to
stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bench import run_bench
from .coefficients import build_table
from .errors import ConvergenceError, HyperpowError
from .identities import DEFAULT_SAMPLES, VERIFIERS
from .power_series import evaluate_power
from .series import ConvergenceControl

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONCONVERGED = 0, 1, 2, 3

_PARAMS = {
    "eq1": ("alpha", "k"), "eq2": ("alpha", "k", "n"), "eq5": ("alpha", "k", "n"),
    "eq8": ("alpha", "x"), "eq9": ("alpha",), "eq10": ("q",), "eq11": ("alpha", "x"),
    "eq12": ("q",),
}


class UsageError(Exception):
    pass


def _num(v):
    return format(v, ".17g") if isinstance(v, float) else str(v)


def _emit(rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        for row in rows:
            out.write(json.dumps(row) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        if rows:
            w.writerow(rows[0].keys())
        for row in rows:
            w.writerow([json.dumps(v) if isinstance(v, dict) else _num(v) for v in row.values()])
    else:
        for row in rows:
            out.write(" ".join(f"{k}={_num(v) if not isinstance(v, dict) else json.dumps(v)}"
                               for k, v in row.items()) + "\n")


def _series_row(args, res) -> dict:
    return {"alpha": args.alpha, "power": args.power, "x": args.x, "value": res.value,
            "terms_used": res.terms_used, "tail_estimate": res.tail_estimate,
            "converged": res.converged}


def cmd_eval(args, out) -> int:
    ctrl = ConvergenceControl(tolerance=args.tol, max_terms=args.max_terms)
    if args.power < 1:
        raise UsageError("--power must be a positive integer")
    try:
        res = evaluate_power(args.alpha, args.power, args.x, ctrl)
    except ConvergenceError as exc:
        if exc.result is not None:
            _emit([_series_row(args, exc.result)], args.format, out)
        raise
    _emit([_series_row(args, res)], args.format, out)
    return EXIT_OK


def cmd_coeffs(args, out) -> int:
    table = build_table(args.alpha, args.levels, args.terms)
    if args.format == "csv":
        out.write(table.to_csv())
    else:
        rows = [{"n": n, "m": m, "value": v}
                for n in range(table.n_max + 1) for m, v in enumerate(table.row(n).tolist())]
        _emit(rows, args.format, out)
    return EXIT_OK


def _verify_jobs(args) -> list[tuple[str, dict]]:
    if args.identity == "all":
        return [(i, p) for i in VERIFIERS for p in DEFAULT_SAMPLES[i]]
    names = _PARAMS[args.identity]
    given = {k: getattr(args, k) for k in names if getattr(args, k) is not None}
    if not given:
        return [(args.identity, p) for p in DEFAULT_SAMPLES[args.identity]]
    missing = [k for k in names if k not in given]
    if missing:
        raise UsageError(f"{args.identity} needs --{' --'.join(missing)}")
    return [(args.identity, given)]


def cmd_verify(args, out) -> int:
    reports = [VERIFIERS[i](**p) for i, p in _verify_jobs(args)]
    _emit([r.to_dict() for r in reports], args.format, out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _powers(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = (int(p) for p in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"--powers expects N or LO..HI, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"--powers range {text!r} is empty or below 1")
    return range(lo, hi + 1)


def cmd_bench(args, out) -> int:
    if args.terms < 1:
        raise UsageError("--terms must be positive")
    if not abs(args.x) < 1.0:
        raise UsageError("bench sums a fixed number of terms and needs |x| < 1")
    records = run_bench(args.alpha, _powers(args.powers), args.x, args.terms)
    _emit([r.to_dict() for r in records], args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperpow",
                                description="Powers of 2F1(1, alpha; alpha+1; x) and identity checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def fmt(sp, default="text"):
        sp.add_argument("--format", choices=("text", "json", "csv"), default=default)

    e = sub.add_parser("eval", help="evaluate F(x)^n from the coefficient table")
    e.add_argument("--alpha", type=float, required=True)
    e.add_argument("--power", type=int, required=True)
    e.add_argument("--x", type=float, required=True)
    e.add_argument("--tol", type=float, default=1e-12)
    e.add_argument("--max-terms", type=int, default=100_000)
    fmt(e)
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("coeffs", help="dump the coefficient table")
    c.add_argument("--alpha", type=float, required=True)
    c.add_argument("--levels", type=int, required=True)
    c.add_argument("--terms", type=int, required=True)
    fmt(c, default="csv")
    c.set_defaults(func=cmd_coeffs)

    v = sub.add_parser("verify", help="check identities numerically")
    v.add_argument("--identity", choices=(*VERIFIERS, "all"), required=True)
    v.add_argument("--alpha", type=float)
    v.add_argument("--q", type=float)
    v.add_argument("--k", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--x", type=float)
    fmt(v)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="count arithmetic of three power strategies")
    b.add_argument("--alpha", type=float, required=True)
    b.add_argument("--powers", default="1..4")
    b.add_argument("--x", type=float, default=0.5)
    b.add_argument("--terms", type=int, default=512)
    fmt(b)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except ConvergenceError as exc:
        out.write(buf.getvalue())
        err.write(f"hyperpow: not converged: {exc}\n")
        return EXIT_NONCONVERGED
    except (UsageError, HyperpowError, ValueError, IndexError) as exc:
        err.write(f"hyperpow: {exc}\n")
        return EXIT_USAGE
    except ArithmeticError as exc:
        err.write(f"hyperpow: numerical failure: {exc}\n")
        return EXIT_NONCONVERGED
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
