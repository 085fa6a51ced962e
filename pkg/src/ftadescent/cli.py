"""Command-line front end.

Exit codes: 0 success, 1 convergence or verification failure, 2 usage or
input errors.  Payloads go to stdout, diagnostics to stderr.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import fields

from .descent import ConvergenceError, DescentConfig, find_all_roots, nth_root
from .estermann import verify_lemma
from .formats import PolynomialParseError, parse_polynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _config(overrides, seed):
    types = {f.name: f.type for f in fields(DescentConfig)}
    values = {}
    for item in overrides:
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep or key not in types:
            raise UsageError(f"unknown config override {item!r}; "
                             f"valid keys: {', '.join(sorted(types))}")
        try:
            values[key] = types[key](raw)
        except ValueError:
            raise UsageError(f"bad value for {key}: {raw!r}") from None
    if seed is not None:
        values["seed"] = seed
    try:
        return DescentConfig(**values)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _read_input(path):
    if path is None:
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(payload, fmt, text_lines):
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("".join(line + "\n" for line in text_lines))


def _cmd_solve(args, with_trace):
    cfg = _config(args.overrides, args.seed)
    try:
        poly = parse_polynomial(_read_input(args.input))
    except PolynomialParseError as exc:
        raise UsageError(f"{args.input or '<stdin>'}: {exc}") from None
    if poly.degree < 1:
        raise UsageError("polynomial must have degree >= 1")
    try:
        roots = find_all_roots(poly, cfg, trace=with_trace)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    payload = {"roots": [r.to_dict() for r in roots], "config": cfg.to_dict()}
    if with_trace:
        payload["trace"] = [
            {"root_index": i, **rec.to_dict()}
            for i, r in enumerate(roots) for rec in r.trace.records
        ]
    lines = [f"{r.root.real!r} {r.root.imag!r} residual={r.residual:.3e} "
             f"multiplicity={r.multiplicity_estimate}" for r in roots]
    if with_trace:
        lines += [f"# step root={s['root_index']} k={s['k']} r={s['r']!r} |P|^2={s['new_value']!r}"
                  for s in payload["trace"]]
    _emit(payload, args.format, lines)
    return EXIT_OK


def _cmd_verify(args):
    lo, hi = args.kmin, args.kmax
    if lo < 2 or lo % 2 or hi % 2 or hi < lo:
        raise UsageError(f"--kmin/--kmax must be even, >= 2 and ordered (got {lo}, {hi})")
    ks = range(lo, hi + 1, 2)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            reports = list(pool.map(verify_lemma, ks))
    else:
        reports = [verify_lemma(k) for k in ks]
    ok = all(r.passed and r.steps_verified for r in reports)
    _emit([r.to_dict() for r in reports], args.format,
          [f"k={r.k} {'pass' if r.passed else 'FAIL'} zeta^k={r.zeta_pow}" for r in reports])
    if not ok:
        bad = [r.k for r in reports if not (r.passed and r.steps_verified)]
        print(f"error: lemma check failed for k={bad}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _cmd_nthroot(args):
    cfg = _config(args.overrides, args.seed)
    if args.a < 0 or args.n < 1:
        raise UsageError("nthroot needs a >= 0 and n >= 1")
    try:
        b = nth_root(args.a, args.n, cfg)
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    _emit({"a": args.a, "n": args.n, "root": b}, args.format, [repr(b)])
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=None, help="restart-sequence seed")

    parser = argparse.ArgumentParser(
        prog="ftadescent",
        description="Polynomial roots by modulus descent along Estermann directions.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("solve", "find all roots of a polynomial"),
                        ("trace", "solve and emit every descent step")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--input", help="polynomial file (JSON or 're im' lines); default stdin")
        if name == "solve":
            p.add_argument("--trace", action="store_true", help="include the descent trace")
        p.add_argument("overrides", nargs="*", metavar="key=value",
                       help="DescentConfig overrides, e.g. tol_residual=1e-12")

    p = sub.add_parser("verify-lemma", parents=[common], help="exact lemma sweep over even k")
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("nthroot", parents=[common], help="non-negative n-th root of a >= 0")
    p.add_argument("a", type=float)
    p.add_argument("n", type=int)
    p.add_argument("overrides", nargs="*", metavar="key=value")
    return parser


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command == "solve":
            return _cmd_solve(args, args.trace)
        if args.command == "trace":
            return _cmd_solve(args, True)
        if args.command == "verify-lemma":
            return _cmd_verify(args)
        return _cmd_nthroot(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
